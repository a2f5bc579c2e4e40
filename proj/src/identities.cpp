#include "lcx/error.hpp"
#include "lcx/qpolys.hpp"
#include "lcx/transforms.hpp"

#include <functional>
#include <map>

namespace lcx {

namespace {

struct IdentityDef {
    std::string statement;
    long n_min;
    // Fills lhs/rhs (as printable exact values) for n_min..n_max and returns
    // whether each index agrees.
    std::function<void(long n_max, std::vector<std::string>& lhs, std::vector<std::string>& rhs,
                       std::vector<bool>& equal)>
        run;
};

Seq ones(long n_max) {
    Seq s;
    s.values.assign(static_cast<std::size_t>(n_max + 1), Int(1));
    return s;
}

Seq powers_of_two(long n_max) {
    Seq s;
    for (long k = 0; k <= n_max; ++k)
        s.values.push_back(pow_int(Int(2), static_cast<unsigned long>(k)));
    return s;
}

Seq factorials(long n_max) {
    Seq s;
    for (long k = 0; k <= n_max; ++k)
        s.values.push_back(factorial(static_cast<unsigned long>(k)));
    return s;
}

// Euler numbers from the boustrophedon (Seidel) triangle, independent of
// the convolution recurrence.
std::vector<Int> euler_boustrophedon(long n_max) {
    std::vector<Int> e{1};
    std::vector<Int> row{1};
    for (long n = 1; n <= n_max; ++n) {
        std::vector<Int> next(static_cast<std::size_t>(n + 1));
        next[0] = 0;
        for (long k = 1; k <= n; ++k)
            next[k] = next[k - 1] + row[static_cast<std::size_t>(n - k)];
        e.push_back(next.back());
        row = std::move(next);
    }
    return e;
}

Int eval_int(Poly const& p, long x) {
    Int acc = 0;
    auto const& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

// Numeric identity from two term-producing callables.
IdentityDef numeric(std::string statement, long n_min, std::function<std::vector<Int>(long)> lhs_fn,
                    std::function<std::vector<Int>(long)> rhs_fn) {
    IdentityDef def;
    def.statement = std::move(statement);
    def.n_min = n_min;
    def.run = [n_min, lhs_fn, rhs_fn](long n_max, std::vector<std::string>& l, std::vector<std::string>& r,
                                      std::vector<bool>& eq) {
        std::vector<Int> a = lhs_fn(n_max);
        std::vector<Int> b = rhs_fn(n_max);
        for (long n = n_min; n <= n_max; ++n) {
            auto i = static_cast<std::size_t>(n);
            l.push_back(a[i].get_str());
            r.push_back(b[i].get_str());
            eq.push_back(a[i] == b[i]);
        }
    };
    return def;
}

IdentityDef polynomial(std::string statement, long n_min, std::function<Poly(long)> lhs_fn,
                       std::function<Poly(long)> rhs_fn) {
    IdentityDef def;
    def.statement = std::move(statement);
    def.n_min = n_min;
    def.run = [n_min, lhs_fn, rhs_fn](long n_max, std::vector<std::string>& l, std::vector<std::string>& r,
                                      std::vector<bool>& eq) {
        for (long n = n_min; n <= n_max; ++n) {
            Poly a = lhs_fn(n);
            Poly b = rhs_fn(n);
            l.push_back(a.to_string());
            r.push_back(b.to_string());
            eq.push_back(a == b);
        }
    };
    return def;
}

std::vector<Int> named(char const* name, long n_max) { return gen_named(name, n_max).values; }

std::map<std::string, IdentityDef, std::less<>> const& identity_table() {
    static const std::map<std::string, IdentityDef, std::less<>> table = [] {
        std::map<std::string, IdentityDef, std::less<>> t;
        t.emplace("delannoy_via_morgan_voyce",
                  numeric("D(n) = sum_k binom(n+k,n-k) b(k)", 0,
                          [](long n) { return named("delannoy", n); },
                          [](long n) { return morgan_voyce_transform(gen_named("central_binomial", n)).values; }));
        t.emplace("schroder_via_morgan_voyce",
                  numeric("r_n = sum_k binom(n+k,n-k) C_k", 0,
                          [](long n) { return named("large_schroder", n); },
                          [](long n) { return morgan_voyce_transform(gen_named("catalan", n)).values; }));
        t.emplace("fibonacci_even_via_morgan_voyce",
                  numeric("F_{2n} = sum_k binom(n+k,n-k)", 0,
                          [](long n) { return bisection(gen_named("fibonacci", 2 * n), Parity::even).values; },
                          [](long n) { return morgan_voyce_transform(ones(n)).values; }));
        t.emplace("central_binomial_via_squared_binomial",
                  numeric("b(n) = sum_k binom(n,k)^2", 0,
                          [](long n) { return named("central_binomial", n); },
                          [](long n) { return named_transform("squared_binomial", ones(n)).values; }));
        t.emplace("delannoy_via_squared_binomial",
                  numeric("D(n) = sum_k binom(n,k)^2 2^k", 0,
                          [](long n) { return named("delannoy", n); },
                          [](long n) { return named_transform("squared_binomial", powers_of_two(n)).values; }));
        t.emplace("catalan_via_narayana",
                  numeric("C_n = sum_k N(n,k)", 0,
                          [](long n) { return named("catalan", n); },
                          [](long n) { return narayana_transform(ones(n)).values; }));
        t.emplace("schroder_via_narayana",
                  numeric("r_n = sum_k N(n,k) 2^k", 0,
                          [](long n) { return named("large_schroder", n); },
                          [](long n) { return narayana_transform(powers_of_two(n)).values; }));
        t.emplace("ordered_bell_via_eulerian",
                  numeric("c(n) = A_n(2)/2", 1,
                          [](long n) { return stirling2_transform(factorials(n)).values; },
                          [](long n) {
                              Triangle e = gen_triangle("eulerian", n);
                              std::vector<Int> v;
                              for (long m = 0; m <= n; ++m) {
                                  Int a2 = eval_int(e.row_poly(m), 2);
                                  v.push_back(m == 0 ? a2 : Int(a2 / 2));
                              }
                              return v;
                          }));
        t.emplace("two_colored_bell_two_ways",
                  numeric("sum_k 2^k S(n,k) = sum_k binom(n,k) B_k B_{n-k}", 0,
                          [](long n) { return stirling2_transform(powers_of_two(n)).values; },
                          [](long n) {
                              Seq b = gen_named("bell", n);
                              return binomial_convolution(b, b).values;
                          }));
        t.emplace("ordered_bell_via_stirling2",
                  numeric("c(n) = sum_k k! S(n,k)", 0,
                          [](long n) { return named("ordered_bell", n); },
                          [](long n) { return stirling2_transform(factorials(n)).values; }));
        t.emplace("euler_halved_convolution",
                  numeric("z_{n+1} = sum_k binom(n,k) z_k z_{n-k} with z_n = E_n/2, as 2 E_{n+1} = sum_k binom(n,k) E_k E_{n-k}",
                          1,
                          [](long n) {
                              std::vector<Int> e = euler_boustrophedon(n + 1);
                              std::vector<Int> v;
                              for (long m = 0; m <= n; ++m)
                                  v.push_back(2 * e[static_cast<std::size_t>(m + 1)]);
                              return v;
                          },
                          [](long n) {
                              Seq e;
                              std::vector<Int> all = euler_boustrophedon(n);
                              e.values = all;
                              return binomial_convolution(e, e).values;
                          }));
        t.emplace("large_schroder_twice_little",
                  numeric("r_n = 2 s_n", 1,
                          [](long n) { return named("large_schroder", n); },
                          [](long n) {
                              std::vector<Int> s = named("little_schroder", n);
                              for (auto& x : s)
                                  x *= 2;
                              return s;
                          }));
        t.emplace("bell_two_ways",
                  numeric("B_{n+1} = sum_k binom(n,k) B_k equals sum_k S(n,k)", 0,
                          [](long n) { return bell_by_binomial_recurrence(n).values; },
                          [](long n) { return stirling2_transform(ones(n)).values; }));
        t.emplace("stirling1_two_ways",
                  numeric("row sums of c(n,k) by summation formula = by local recurrence = n!", 0,
                          [](long n) { return triangle_transform(stirling1_by_summation(n), ones(n)).values; },
                          [](long n) { return stirling1_transform(ones(n)).values; }));
        t.emplace("frobenius",
                  polynomial("A_n(q) = q sum_{k=1}^n k! S(n,k) (q-1)^(n-k)", 1,
                             [](long n) { return gen_triangle("eulerian", n).row_poly(n); },
                             [](long n) {
                                 Triangle s2 = gen_triangle("stirling2", n);
                                 Poly q_minus_one{Int(-1), Int(1)};
                                 Poly acc;
                                 Poly power{Int(1)};  // (q-1)^(n-k), built from k = n downward
                                 for (long k = n; k >= 1; --k) {
                                     acc += power * (factorial(static_cast<unsigned long>(k)) * s2.at(n, k));
                                     power = power * q_minus_one;
                                 }
                                 return Poly{Int(0), Int(1)} * acc;
                             }));
        t.emplace("q_schroder_via_narayana_shift",
                  polynomial("r_n(q) = N_n(1+q)", 0,
                             [](long n) {
                                 std::vector<Int> c(static_cast<std::size_t>(n + 1));
                                 Seq cat = gen_named("catalan", n);
                                 for (long k = 0; k <= n; ++k)
                                     c[static_cast<std::size_t>(n - k)] = binomial(n + k, n - k) * cat[k];
                                 return Poly(std::move(c));
                             },
                             [](long n) { return gen_triangle("narayana", n).row_poly(n).compose_affine(Int(1)); }));
        return t;
    }();
    return table;
}

} // namespace

std::vector<std::string> const& identity_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (auto const& kv : identity_table())
            v.push_back(kv.first);
        return v;
    }();
    return names;
}

IdentityReport verify_identity(std::string_view name, long n_max) {
    auto it = identity_table().find(name);
    if (it == identity_table().end())
        throw error(errc::unknown_identity, "unknown identity '" + std::string(name) + "'");
    IdentityDef const& def = it->second;
    if (n_max < def.n_min)
        throw error(errc::range_error, "n_max must be >= " + std::to_string(def.n_min));
    IdentityReport rep;
    rep.name = it->first;
    rep.statement = def.statement;
    rep.n_min = def.n_min;
    rep.n_max = n_max;
    std::vector<std::string> lhs, rhs;
    std::vector<bool> eq;
    def.run(n_max, lhs, rhs, eq);
    for (std::size_t i = 0; i < eq.size(); ++i) {
        if (!eq[i]) {
            rep.all_equal = false;
            rep.first_mismatch = def.n_min + static_cast<long>(i);
            rep.lhs_at_mismatch = lhs[i];
            rep.rhs_at_mismatch = rhs[i];
            break;
        }
    }
    return rep;
}

} // namespace lcx
