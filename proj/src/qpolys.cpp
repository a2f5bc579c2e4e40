#include "lcx/qpolys.hpp"

#include "lcx/error.hpp"
#include "lcx/transforms.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcx {

namespace {

QCheckReport coefficient_check(PolySeq const& ps, bool convex) {
    if (ps.size() < 3)
        throw error(errc::too_short, "need at least 3 polynomials, got " + std::to_string(ps.size()));
    QCheckReport r;
    r.range_lo = 1;
    r.range_hi = static_cast<long>(ps.size()) - 2;
    for (std::size_t n = 1; n + 1 < ps.size(); ++n) {
        Poly d = q_convexity_difference(ps, n);
        if (!convex)
            d = -d;
        NonnegReport nn = coeffs_nonneg(d);
        if (!nn.nonneg) {
            r.status = CheckStatus::fails;
            r.n = static_cast<long>(n);
            r.power = nn.first_negative_power;
            r.coefficient = d.coeff(*nn.first_negative_power);
            break;
        }
    }
    return r;
}

void cross_check(bool ok, std::string const& what) {
    if (!ok)
        throw std::logic_error("cross-check failed: " + what);
}

Poly row_of(Triangle const& t, long n) { return t.row_poly(n); }

Int eval_at(Poly const& p, long x) {
    Int acc = 0;
    auto const& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

// sum_k binom(n+k, n-k) w_k q^(n-k)
Poly morgan_voyce_weighted_reversed(long n, Seq const& w) {
    std::vector<Int> c(static_cast<std::size_t>(n + 1));
    for (long k = 0; k <= n; ++k)
        c[static_cast<std::size_t>(n - k)] = binomial(n + k, n - k) * w[static_cast<std::size_t>(k)];
    return Poly(std::move(c));
}

PolySeq gen_bell(long n_max) {
    PolySeq ps{{}, "bell"};
    Poly b{Int(1)};
    Poly q{Int(0), Int(1)};
    for (long n = 0; n <= n_max; ++n) {
        ps.polys.push_back(b);
        b = q * (b + b.derivative());
    }
    Triangle s2 = gen_triangle("stirling2", n_max);
    Seq bell = gen_named("bell", n_max);
    for (long n = 0; n <= n_max; ++n) {
        cross_check(ps[n] == row_of(s2, n), "Bell polynomial vs Stirling-2 row " + std::to_string(n));
        cross_check(eval_at(ps[n], 1) == bell[n], "B_n(1) vs Bell number at n = " + std::to_string(n));
    }
    return ps;
}

PolySeq gen_eulerian(long n_max) {
    PolySeq ps{{}, "eulerian"};
    Poly a{Int(1)};
    Poly q{Int(0), Int(1)};
    Poly q_one_minus_q{Int(0), Int(1), Int(-1)};
    ps.polys.push_back(a);
    for (long n = 1; n <= n_max; ++n) {
        a = q * Int(n) * a + q_one_minus_q * a.derivative();
        ps.polys.push_back(a);
    }
    Triangle et = gen_triangle("eulerian", n_max);
    Seq ob = gen_named("ordered_bell", n_max);
    for (long n = 0; n <= n_max; ++n) {
        cross_check(ps[n] == row_of(et, n), "Eulerian polynomial vs triangle row " + std::to_string(n));
        cross_check(eval_at(ps[n], 1) == factorial(static_cast<unsigned long>(n)),
                    "A_n(1) vs n! at n = " + std::to_string(n));
        if (n >= 1)
            cross_check(eval_at(ps[n], 2) == 2 * ob[n], "A_n(2) vs 2 c(n) at n = " + std::to_string(n));
    }
    return ps;
}

PolySeq gen_morgan_voyce(long n_max) {
    PolySeq ps{{}, "morgan_voyce"};
    Poly two_plus_q{Int(2), Int(1)};
    ps.polys.push_back(Poly{Int(1)});
    if (n_max >= 1)
        ps.polys.push_back(Poly{Int(1), Int(1)});
    for (long n = 1; n < n_max; ++n)
        ps.polys.push_back(two_plus_q * ps[n] - ps[n - 1]);
    Triangle mv = gen_triangle("morgan_voyce", n_max);
    for (long n = 0; n <= n_max; ++n)
        cross_check(ps[n] == row_of(mv, n), "Morgan-Voyce recurrence vs closed form, row " + std::to_string(n));
    return ps;
}

PolySeq gen_narayana(long n_max) {
    // (n+1) N_n = (2n-1)(1+q) N_{n-1} - (n-2)(1-q)^2 N_{n-2}
    PolySeq ps{{}, "narayana"};
    Poly one_plus_q{Int(1), Int(1)};
    Poly one_minus_q_sq{Int(1), Int(-2), Int(1)};
    ps.polys.push_back(Poly{Int(1)});
    if (n_max >= 1)
        ps.polys.push_back(Poly{Int(0), Int(1)});
    for (long n = 2; n <= n_max; ++n) {
        Poly rhs = one_plus_q * ps[n - 1] * Int(2 * n - 1) - one_minus_q_sq * ps[n - 2] * Int(n - 2);
        if (!rhs.exact_divide(Int(n + 1)))
            throw std::logic_error("Narayana recurrence: inexact division at n = " + std::to_string(n));
        ps.polys.push_back(std::move(rhs));
    }
    Triangle nt = gen_triangle("narayana", n_max);
    for (long n = 0; n <= n_max; ++n)
        cross_check(ps[n] == row_of(nt, n), "Narayana recurrence vs closed form, row " + std::to_string(n));
    return ps;
}

PolySeq gen_q_schroder(long n_max) {
    PolySeq ps{{}, "q_schroder"};
    Seq catalan = gen_named("catalan", n_max);
    for (long n = 0; n <= n_max; ++n)
        ps.polys.push_back(morgan_voyce_weighted_reversed(n, catalan));
    Seq large = gen_named("large_schroder", n_max);
    Triangle nt = gen_triangle("narayana", n_max);
    for (long n = 0; n <= n_max; ++n) {
        cross_check(eval_at(ps[n], 1) == large[n], "r_n(1) vs large Schroder at n = " + std::to_string(n));
        cross_check(ps[n] == row_of(nt, n).compose_affine(Int(1)),
                    "r_n(q) vs N_n(1+q) at n = " + std::to_string(n));
    }
    return ps;
}

PolySeq gen_q_delannoy(long n_max) {
    PolySeq ps{{}, "q_delannoy"};
    Seq cb = gen_named("central_binomial", n_max);
    for (long n = 0; n <= n_max; ++n)
        ps.polys.push_back(morgan_voyce_weighted_reversed(n, cb));
    Seq d = gen_named("delannoy", n_max);
    for (long n = 0; n <= n_max; ++n)
        cross_check(eval_at(ps[n], 1) == d[n], "D_n(1) vs Delannoy at n = " + std::to_string(n));
    return ps;
}

PolySeq gen_q_factorial(long n_max) {
    PolySeq ps{{}, "q_factorial"};
    Poly acc{Int(1)};
    ps.polys.push_back(acc);
    for (long k = 1; k <= n_max; ++k) {
        acc = acc * Poly(std::vector<Int>(static_cast<std::size_t>(k), Int(1)));
        ps.polys.push_back(acc);
    }
    for (long n = 0; n <= n_max; ++n) {
        cross_check(ps[n].degree() == n * (n - 1) / 2, "deg (n)_q! at n = " + std::to_string(n));
        cross_check(eval_at(ps[n], 1) == factorial(static_cast<unsigned long>(n)),
                    "(n)_q! at q = 1 at n = " + std::to_string(n));
    }
    return ps;
}

} // namespace

Poly q_convexity_difference(PolySeq const& ps, std::size_t n) {
    if (n < 1 || n + 1 >= ps.size())
        throw error(errc::range_error, "difference needs 1 <= n <= len-2");
    return ps[n - 1] * ps[n + 1] - ps[n] * ps[n];
}

QCheckReport q_log_convex_check(PolySeq const& ps) { return coefficient_check(ps, true); }

QCheckReport q_log_concave_check(PolySeq const& ps) { return coefficient_check(ps, false); }

std::vector<std::string> const& poly_family_names() {
    static const std::vector<std::string> names = {
        "bell", "eulerian", "morgan_voyce", "narayana", "q_delannoy", "q_factorial", "q_schroder",
    };
    return names;
}

PolySeq gen_poly_seq(std::string_view name, long n_max) {
    if (n_max < 0)
        throw error(errc::range_error, "n_max must be >= 0");
    if (name == "bell")
        return gen_bell(n_max);
    if (name == "eulerian")
        return gen_eulerian(n_max);
    if (name == "morgan_voyce")
        return gen_morgan_voyce(n_max);
    if (name == "narayana")
        return gen_narayana(n_max);
    if (name == "q_schroder")
        return gen_q_schroder(n_max);
    if (name == "q_delannoy")
        return gen_q_delannoy(n_max);
    if (name == "q_factorial")
        return gen_q_factorial(n_max);
    throw error(errc::unknown_family, "unknown polynomial family '" + std::string(name) + "'");
}

PolySeq row_polys(Triangle const& t) {
    PolySeq ps{{}, t.name};
    for (std::size_t n = 0; n < t.num_rows(); ++n)
        ps.polys.push_back(t.row_poly(static_cast<long>(n)));
    return ps;
}

// ---------------------------------------------------------- triangle rec

bool TriangleRec::admissible() const {
    return a1 >= 0 && a1 + a2 >= 0 && a1 + a3 >= 0 && b1 >= 0 && b1 + b2 >= 0 && b1 + b2 + b3 >= 0;
}

Triangle TriangleRec::generate(long n_max) const {
    Triangle t;
    t.name = "triangle_rec";
    t.rows.push_back({Int(1)});
    for (long n = 1; n <= n_max; ++n) {
        std::vector<Int> row(static_cast<std::size_t>(n + 1));
        for (long k = 0; k <= n; ++k) {
            Rat v = (a1 * n + a2 * k + a3) * Rat(t.at(n - 1, k)) + (b1 * n + b2 * k + b3) * Rat(t.at(n - 1, k - 1));
            if (!is_integer(v))
                throw error(errc::range_error, "T(" + std::to_string(n) + "," + std::to_string(k) +
                                                   ") = " + v.get_str() + " is not an integer");
            row[static_cast<std::size_t>(k)] = v.get_num();
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::array<Rat, 3> thm_T_quantities(TriangleRec const& tr) {
    return {Rat(tr.a2 * tr.b1 - tr.a1 * tr.b2), Rat(tr.a2 * (tr.b1 + tr.b2) - tr.a1 * tr.b2),
            Rat(tr.a2 * (tr.b1 + tr.b2 + tr.b3) - (tr.a1 + tr.a3) * tr.b2)};
}

namespace {

std::string affine_form(Rat const& cn, Rat const& ck, Rat const& c0) {
    std::string out;
    auto add = [&](Rat const& c, char const* var) {
        if (c == 0)
            return;
        Rat mag = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (mag != 1 || *var == '\0')
            out += mag.get_str();
        out += var;
    };
    add(cn, "n");
    add(ck, "k");
    add(c0, "");
    return out.empty() ? "0" : out;
}

} // namespace

Certificate check_thm_T_qlcx(TriangleRec const& tr, long n_max) {
    if (!tr.admissible())
        throw error(errc::inadmissible_recurrence,
                    "need a1, a1+a2, a1+a3, b1, b1+b2, b1+b2+b3 >= 0");
    Certificate cert;
    cert.theorem = "thm_T_qlcx";
    cert.target = "triangle_rec";
    cert.range_lo = 0;
    cert.range_hi = n_max;
    cert.params = {{"theorem", "thm_T_qlcx"},
                   {"coefficients",
                    {tr.a1.get_str(), tr.a2.get_str(), tr.a3.get_str(), tr.b1.get_str(), tr.b2.get_str(),
                     tr.b3.get_str()}},
                   {"n_max", n_max}};

    auto q = thm_T_quantities(tr);
    static char const* const ids[] = {"Q1", "Q2", "Q3"};
    static char const* const statements[] = {
        "a2*b1 - a1*b2 >= 0",
        "a2*(b1+b2) - a1*b2 >= 0",
        "a2*(b1+b2+b3) - (a1+a3)*b2 >= 0",
    };
    for (int i = 0; i < 3; ++i)
        cert.add({ids[i], statements[i], q[i] >= 0, std::nullopt, q[i].get_str()});

    cert.data["quantities"] = {q[0].get_str(), q[1].get_str(), q[2].get_str()};
    cert.data["condition"] = affine_form(q[0], tr.a2 * tr.b2, tr.a2 * tr.b3 - tr.a3 * tr.b2);

    // Direct check of the generated rows, independent of the criterion.
    if (n_max >= 2) {
        QCheckReport direct = q_log_convex_check(row_polys(tr.generate(n_max)));
        nlohmann::ordered_json d = {{"status", std::string(status_name(direct.status))}, {"n_max", n_max}};
        if (direct.n) {
            d["n"] = *direct.n;
            d["power"] = *direct.power;
        }
        cert.data["direct_rows_qlcx"] = d;
    }
    cert.conclusion = cert.certified() ? "row polynomials T_n(q) form a q-log-convex sequence for all n"
                                       : "criterion not satisfied; no conclusion";
    return cert;
}

// -------------------------------------------------------------- curvature

Int CurvatureTable::total() const {
    Int s = 0;
    for (auto const& v : values)
        s += v;
    return s;
}

CurvatureTable curvature_table(Triangle const& t, long n, long t_index) {
    if (n < 1 || t_index < 0 || t_index > 2 * n)
        throw error(errc::range_error, "need 1 <= n and 0 <= t <= 2n");
    if (static_cast<long>(t.num_rows()) < n + 2)
        throw error(errc::range_error, "triangle needs rows through n+1 = " + std::to_string(n + 1));
    CurvatureTable ct;
    ct.n = n;
    ct.t = t_index;
    for (long k = 0; 2 * k <= t_index; ++k) {
        Int v;
        if (2 * k < t_index)
            v = t.at(n - 1, k) * t.at(n + 1, t_index - k) + t.at(n + 1, k) * t.at(n - 1, t_index - k) -
                2 * t.at(n, k) * t.at(n, t_index - k);
        else
            v = t.at(n - 1, k) * t.at(n + 1, k) - t.at(n, k) * t.at(n, k);
        ct.values.push_back(std::move(v));
    }
    for (std::size_t k = 0; k < ct.values.size() && ct.values[k] >= 0; ++k)
        ct.r = static_cast<long>(k);
    return ct;
}

std::string_view c2_status_name(C2Status s) {
    switch (s) {
    case C2Status::holds: return "holds";
    case C2Status::weak: return "weak";
    case C2Status::fails: return "fails";
    }
    return "unknown";
}

C2Scan classify_c2(CurvatureTable const& ct) {
    C2Scan scan;
    bool negative_seen = false;
    for (std::size_t k = 0; k < ct.values.size(); ++k) {
        int s = sgn(ct.values[k]);
        if (s < 0) {
            negative_seen = true;
        } else if (negative_seen && s > 0) {
            scan.status = C2Status::fails;
            scan.witness = std::array<long, 3>{ct.n, ct.t, static_cast<long>(k)};
            return scan;
        } else if (negative_seen && s == 0 && scan.status == C2Status::holds) {
            scan.status = C2Status::weak;
            scan.witness = std::array<long, 3>{ct.n, ct.t, static_cast<long>(k)};
        }
    }
    return scan;
}

Certificate check_C1_C2(Triangle const& t, long n_max) {
    if (n_max < 1 || static_cast<long>(t.num_rows()) < n_max + 2)
        throw error(errc::range_error, "need rows 0.." + std::to_string(n_max + 1));
    Certificate cert;
    cert.theorem = "C1_C2";
    cert.target = t.name;
    cert.range_lo = 1;
    cert.range_hi = n_max;
    cert.params = {{"theorem", "C1_C2"}, {"triangle", t.name}, {"n_max", n_max}};

    PolySeq rows;
    rows.name = t.name;
    for (long n = 0; n <= n_max + 1; ++n)
        rows.polys.push_back(t.row_poly(n));
    QCheckReport c1 = q_log_convex_check(rows);
    HypothesisCheck h1{"C1", "row polynomials are q-log-convex", c1.holds(), c1.n, ""};
    if (!c1.holds())
        h1.detail = "coefficient of q^" + std::to_string(*c1.power) + " is " + c1.coefficient.get_str();
    cert.add(h1);

    C2Status worst = C2Status::holds;
    std::optional<std::array<long, 3>> fail_witness, weak_witness;
    long max_sign_changes = 0;
    for (long n = 1; n <= n_max && !fail_witness; ++n) {
        for (long ti = 0; ti <= 2 * n; ++ti) {
            CurvatureTable ct = curvature_table(t, n, ti);
            C2Scan scan = classify_c2(ct);
            long changes = 0;
            for (std::size_t k = 1; k < ct.values.size(); ++k)
                if ((ct.values[k - 1] >= 0) != (ct.values[k] >= 0))
                    ++changes;
            max_sign_changes = std::max(max_sign_changes, changes);
            if (scan.status == C2Status::fails) {
                worst = C2Status::fails;
                fail_witness = scan.witness;
                break;
            }
            if (scan.status == C2Status::weak && !weak_witness) {
                worst = C2Status::weak;
                weak_witness = scan.witness;
            }
        }
    }
    HypothesisCheck h2{"C2", "a_k(n,t) >= 0 for k <= r and < 0 for k > r", worst != C2Status::fails,
                       std::nullopt, ""};
    auto witness_str = [](std::array<long, 3> const& w) {
        return "(n,t,k) = (" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," + std::to_string(w[2]) + ")";
    };
    if (fail_witness) {
        h2.witness_index = (*fail_witness)[0];
        h2.detail = "sign pattern broken at " + witness_str(*fail_witness);
    } else if (weak_witness) {
        h2.witness_index = (*weak_witness)[0];
        h2.detail = "weak form: zero after a negative value at " + witness_str(*weak_witness);
    }
    cert.add(h2);
    cert.data["c2_status"] = std::string(c2_status_name(worst));
    cert.data["max_sign_changes"] = max_sign_changes;
    cert.conclusion = cert.certified() ? "(C1) and (C2) hold for 1 <= n <= " + std::to_string(n_max)
                                       : "(C1)/(C2) not established on the range";
    return cert;
}

Int morgan_voyce_tilde(long n, long t, long k) {
    Int N(n), T(t), K(k);
    return (N + K) * (N + 1 + K) * (N - T + K) * (N - T + K + 1) +
           (N - K) * (N - K + 1) * (N + T - K) * (N + T - K + 1) -
           2 * (N + K) * (N - K + 1) * (N + T - K) * (N - T + K + 1);
}

std::optional<std::array<long, 3>> check_morgan_voyce_tilde(long n_max) {
    Triangle mv = gen_triangle("morgan_voyce", n_max + 1);
    for (long n = 1; n <= n_max; ++n) {
        for (long t = 0; t <= 2 * n; ++t) {
            CurvatureTable ct = curvature_table(mv, n, t);
            for (long k = 0; 2 * k <= t; ++k) {
                Int tk = morgan_voyce_tilde(n, t, k);
                if (2 * (k + 1) <= t && morgan_voyce_tilde(n, t, k + 1) > tk)
                    return std::array<long, 3>{n, t, k};
                bool prefactor_defined = n + 1 - k >= 0 && n + 1 - t + k >= 0;
                if (prefactor_defined && sgn(tk) != sgn(ct.values[static_cast<std::size_t>(k)]))
                    return std::array<long, 3>{n, t, k};
            }
        }
    }
    return std::nullopt;
}

ProbeReport transform_preserves_lcx_probe(std::string_view triangle, std::size_t corpus_size, std::size_t len,
                                          std::uint64_t seed, std::optional<Seq> weights) {
    if (len < 3)
        throw error(errc::too_short, "probe sequences need length >= 3");
    Triangle t = gen_triangle(triangle, static_cast<long>(len) - 1);
    if (weights) {
        if (weights->size() < len)
            throw error(errc::length_mismatch, "weights shorter than the probe length");
        for (auto& row : t.rows)
            for (std::size_t k = 0; k < row.size(); ++k)
                row[k] *= (*weights)[k];
    }
    ProbeReport rep;
    rep.triangle = std::string(triangle);
    rep.corpus_size = corpus_size;
    rep.len = len;
    for (auto const& x : log_convex_corpus(corpus_size, len, seed)) {
        Seq z = triangle_transform(t, x);
        CheckReport cr = is_log_convex(z);
        if (!cr.holds()) {
            ++rep.failures;
            if (!rep.first_counterexample_input) {
                rep.first_counterexample_input = x;
                rep.first_counterexample_check = cr;
            }
        }
    }
    return rep;
}

} // namespace lcx
