#include "lcx/sequences.hpp"

#include "lcx/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace lcx {

namespace {

RatPoly rp(std::initializer_list<long> c) {
    std::vector<Rat> v;
    for (long x : c)
        v.emplace_back(x);
    return RatPoly(std::move(v));
}

std::vector<Rat> inits(long z0, long z1) { return {Rat(z0), Rat(z1)}; }

Recurrence3 make_rec(std::string name, RatPoly a, RatPoly b, RatPoly c, RecSign s,
                     std::vector<Rat> init, long offset = 0) {
    Recurrence3 r;
    r.name = std::move(name);
    r.alpha = std::move(a);
    r.beta = std::move(b);
    r.gamma = std::move(c);
    r.sign = s;
    r.initial = std::move(init);
    r.start = 1;
    r.offset = offset;
    return r;
}

// Three-term recurrences, normalized to a_n z_{n+1} = b_n z_n +- c_n z_{n-1}.
std::map<std::string, std::function<Recurrence3(Convention)>, std::less<>> const& recurrence_table() {
    using S = RecSign;
    static const std::map<std::string, std::function<Recurrence3(Convention)>, std::less<>> table = {
        {"motzkin", [](Convention) {
             return make_rec("motzkin", rp({3, 1}), rp({3, 2}), rp({0, 3}), S::plus, inits(1, 1));
         }},
        {"fine", [](Convention) {
             return make_rec("fine", rp({4, 2}), rp({2, 7}), rp({2, 4}), S::plus, inits(1, 0));
         }},
        {"fine_shifted", [](Convention) {
             return make_rec("fine_shifted", rp({8, 2}), rp({16, 7}), rp({10, 4}), S::plus, inits(1, 2), 2);
         }},
        {"central_binomial", [](Convention) {
             return make_rec("central_binomial", rp({1, 1}), rp({2, 4}), RatPoly{}, S::plus, inits(1, 2));
         }},
        {"catalan", [](Convention) {
             return make_rec("catalan", rp({2, 1}), rp({2, 4}), RatPoly{}, S::plus, inits(1, 1));
         }},
        {"delannoy", [](Convention) {
             return make_rec("delannoy", rp({1, 1}), rp({3, 6}), rp({0, 1}), S::minus, inits(1, 3));
         }},
        {"little_schroder", [](Convention) {
             return make_rec("little_schroder", rp({2, 1}), rp({3, 6}), rp({-1, 1}), S::minus, inits(1, 1));
         }},
        {"large_schroder", [](Convention) {
             return make_rec("large_schroder", rp({2, 1}), rp({3, 6}), rp({-1, 1}), S::minus, inits(1, 2));
         }},
        {"derangements", [](Convention) {
             return make_rec("derangements", rp({1}), rp({0, 1}), rp({0, 1}), S::plus, inits(1, 0));
         }},
        {"derangements_shifted", [](Convention) {
             return make_rec("derangements_shifted", rp({1}), rp({2, 1}), rp({2, 1}), S::plus, inits(1, 2), 2);
         }},
        {"directed_animals", [](Convention) {
             return make_rec("directed_animals", rp({1, 1}), rp({2, 2}), rp({-3, 3}), S::plus, inits(1, 1));
         }},
        {"polyhexes", [](Convention) {
             return make_rec("polyhexes", rp({2, 1}), rp({3, 6}), rp({-5, 5}), S::minus, inits(1, 1));
         }},
        {"cubic_walks", [](Convention) {
             return make_rec("cubic_walks", rp({3, 1}), rp({12, 8}), rp({0, 12}), S::minus, inits(1, 4));
         }},
        {"fibonacci", [](Convention) {
             return make_rec("fibonacci", rp({1}), rp({1}), rp({1}), S::plus, inits(1, 1));
         }},
        {"lucas", [](Convention c) {
             return make_rec("lucas", rp({1}), rp({1}), rp({1}), S::plus,
                             c == Convention::catalogue ? inits(1, 3) : inits(2, 1));
         }},
        {"pell", [](Convention c) {
             return make_rec("pell", rp({1}), rp({2}), rp({1}), S::plus,
                             c == Convention::catalogue ? inits(1, 2) : inits(0, 1));
         }},
    };
    return table;
}

Seq make_seq(std::string name, std::vector<Int> v, long offset = 0) {
    Seq s;
    s.values = std::move(v);
    s.name = std::move(name);
    s.offset = offset;
    return s;
}

// Sum over row k of a rolling triangle T(n+1,k) = f(k) T(n,k) + g(k) T(n,k-1).
template <typename Step>
Seq row_sums(std::string name, long n_max, Step step) {
    std::vector<Int> row{1};
    std::vector<Int> out;
    for (long n = 0; n <= n_max; ++n) {
        Int s = 0;
        for (auto const& x : row)
            s += x;
        out.push_back(s);
        row.push_back(0);
        for (long k = static_cast<long>(row.size()) - 1; k >= 1; --k)
            row[k] = step(n, k, row[k], row[k - 1]);
        row[0] = step(n, 0, row[0], Int(0));
    }
    return make_seq(std::move(name), std::move(out));
}

// s_n = sum_k binom(n,k) x_k x_{n-k} using the k <-> n-k symmetry.
Int symmetric_binomial_square(std::vector<Int> const& x, long n) {
    Int s = 0;
    Int binom = 1;
    for (long k = 0; 2 * k <= n; ++k) {
        if (k > 0) {
            binom *= (n - k + 1);
            mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(k));
        }
        Int term = binom * x[k] * x[n - k];
        if (2 * k == n)
            s += term;
        else
            s += 2 * term;
    }
    return s;
}

} // namespace

// ------------------------------------------------------------------ types

Int Triangle::at(long n, long k) const {
    if (n < 0 || k < 0 || k > n || n >= static_cast<long>(rows.size()))
        return 0;
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Poly Triangle::row_poly(long n) const {
    if (n < 0 || n >= static_cast<long>(rows.size()))
        throw error(errc::range_error, "row " + std::to_string(n) + " not generated");
    return Poly(rows[static_cast<std::size_t>(n)]);
}

Seq RecurrenceTerms::to_seq(std::string name, long offset) const {
    if (!integral)
        throw error(errc::range_error, "recurrence terms are not all integers");
    std::vector<Int> v;
    v.reserve(values.size());
    for (auto const& x : values)
        v.push_back(x.get_num());
    return make_seq(std::move(name), std::move(v), offset);
}

RecurrenceTerms gen_from_recurrence3(Recurrence3 const& rec, long n_max) {
    if (rec.start < 1)
        throw error(errc::validation_error, "recurrence start must be >= 1");
    if (static_cast<long>(rec.initial.size()) < rec.start + 1)
        throw error(errc::validation_error, "need initial values z_0..z_start");
    if (n_max < 1)
        throw error(errc::range_error, "n_max must be >= 1");
    RecurrenceTerms out;
    long seeded = std::min<long>(static_cast<long>(rec.initial.size()) - 1, rec.start);
    for (long i = 0; i <= std::min(seeded, n_max); ++i)
        out.values.push_back(rec.initial[static_cast<std::size_t>(i)]);
    for (long n = seeded; n < n_max; ++n) {
        Rat a = rec.a(n);
        if (a == 0)
            throw error(errc::zero_leading_coefficient,
                        "a_n = 0 at n = " + std::to_string(n) + " in " + rec.name);
        Rat rhs = rec.b(n) * out.values[static_cast<std::size_t>(n)];
        Rat tail = rec.c(n) * out.values[static_cast<std::size_t>(n - 1)];
        if (rec.sign == RecSign::plus)
            rhs += tail;
        else
            rhs -= tail;
        out.values.push_back(rhs / a);
    }
    // Extra initial values beyond z_start must agree with the recurrence.
    for (std::size_t i = static_cast<std::size_t>(seeded) + 1; i < rec.initial.size() && i < out.values.size(); ++i)
        if (out.values[i] != rec.initial[i])
            throw error(errc::validation_error,
                        "initial value z_" + std::to_string(i) + " disagrees with the recurrence");
    for (auto const& x : out.values)
        if (!is_integer(x))
            out.integral = false;
    return out;
}

// -------------------------------------------------------------- catalogue

std::vector<std::string> const& catalogue_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (auto const& kv : recurrence_table())
            v.push_back(kv.first);
        for (char const* extra : {"euler", "bell", "ordered_bell", "two_colored_bell", "factorial"})
            v.emplace_back(extra);
        std::sort(v.begin(), v.end());
        return v;
    }();
    return names;
}

bool is_catalogue_name(std::string_view name) {
    auto const& n = catalogue_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

bool has_catalogue_recurrence(std::string_view name) {
    return recurrence_table().find(name) != recurrence_table().end();
}

Recurrence3 catalogue_recurrence(std::string_view name, Convention conv) {
    auto it = recurrence_table().find(name);
    if (it == recurrence_table().end())
        throw error(errc::unknown_sequence, "unknown sequence '" + std::string(name) + "'");
    return it->second(conv);
}

Seq euler_by_convolution(long n_max) {
    // 2 E_{n+1} = sum_k binom(n,k) E_k E_{n-k} for n >= 1, E_0 = E_1 = 1.
    std::vector<Int> e{1, 1};
    for (long n = 1; n < n_max; ++n) {
        Int s = symmetric_binomial_square(e, n);
        if (!mpz_even_p(s.get_mpz_t()))
            throw std::logic_error("Euler convolution sum is odd at n = " + std::to_string(n));
        mpz_divexact_ui(s.get_mpz_t(), s.get_mpz_t(), 2);
        e.push_back(s);
    }
    e.resize(static_cast<std::size_t>(n_max + 1));
    return make_seq("euler", std::move(e));
}

Seq bell_by_binomial_recurrence(long n_max) {
    // B_{n+1} = sum_k binom(n,k) B_k
    std::vector<Int> b{1};
    std::vector<Int> binom{1};  // row n of Pascal's triangle
    for (long n = 0; n < n_max; ++n) {
        Int s = 0;
        for (long k = 0; k <= n; ++k)
            s += binom[k] * b[k];
        b.push_back(s);
        binom.push_back(1);
        for (long k = n; k >= 1; --k)
            binom[k] += binom[k - 1];
    }
    return make_seq("bell", std::move(b));
}

Seq gen_named(std::string_view name, long n_max, Convention conv) {
    if (n_max < 0)
        throw error(errc::range_error, "n_max must be >= 0");
    if (name == "euler")
        return euler_by_convolution(n_max);
    if (name == "bell")
        return row_sums("bell", n_max, [](long, long k, Int const& cur, Int const& prev) {
            return Int(k * cur + prev);
        });
    if (name == "ordered_bell")
        return row_sums("ordered_bell", n_max, [](long, long k, Int const& cur, Int const& prev) {
            return Int(k * (cur + prev));
        });
    if (name == "two_colored_bell")
        return row_sums("two_colored_bell", n_max, [](long, long k, Int const& cur, Int const& prev) {
            return Int(k * cur + 2 * prev);
        });
    if (name == "factorial") {
        std::vector<Int> v{1};
        for (long n = 1; n <= n_max; ++n)
            v.push_back(v.back() * n);
        return make_seq("factorial", std::move(v));
    }
    if (!has_catalogue_recurrence(name))
        throw error(errc::unknown_sequence, "unknown sequence '" + std::string(name) + "'");

    Recurrence3 rec = catalogue_recurrence(name, conv);
    long n_gen = std::max<long>(n_max, 1);
    Seq s = gen_from_recurrence3(rec, n_gen).to_seq(rec.name, rec.offset);
    s.values.resize(static_cast<std::size_t>(n_max + 1));

    // Closed forms double-check the two hypergeometric entries.
    if (name == "central_binomial" || name == "catalan") {
        for (long n = 0; n <= n_max; ++n) {
            Int closed = binomial(2 * n, n);
            if (name == "catalan")
                mpz_divexact_ui(closed.get_mpz_t(), closed.get_mpz_t(), static_cast<unsigned long>(n + 1));
            if (closed != s.values[static_cast<std::size_t>(n)])
                throw std::logic_error(std::string(name) + ": closed form and recurrence disagree at n = " +
                                       std::to_string(n));
        }
    }
    return s;
}

// -------------------------------------------------------------- triangles

std::vector<std::string> const& triangle_names() {
    static const std::vector<std::string> names = {
        "binomial", "eulerian", "morgan_voyce", "narayana", "squared_binomial", "stirling1", "stirling2",
    };
    return names;
}

namespace {

template <typename Step>
Triangle rolling_triangle(std::string name, long n_max, Step step) {
    Triangle t;
    t.name = std::move(name);
    t.rows.push_back({Int(1)});
    for (long n = 1; n <= n_max; ++n) {
        auto const& prev = t.rows.back();
        std::vector<Int> row(static_cast<std::size_t>(n + 1));
        for (long k = 0; k <= n; ++k) {
            Int cur = k < n ? prev[k] : Int(0);
            Int left = k >= 1 ? prev[k - 1] : Int(0);
            row[k] = step(n, k, cur, left);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

template <typename Entry>
Triangle closed_triangle(std::string name, long n_max, Entry entry) {
    Triangle t;
    t.name = std::move(name);
    for (long n = 0; n <= n_max; ++n) {
        std::vector<Int> row;
        for (long k = 0; k <= n; ++k)
            row.push_back(entry(n, k));
        t.rows.push_back(std::move(row));
    }
    return t;
}

} // namespace

Triangle gen_triangle(std::string_view name, long n_max) {
    if (n_max < 0)
        throw error(errc::range_error, "n_max must be >= 0");
    // Rolling steps produce row n from row n-1: (n, k, a(n-1,k), a(n-1,k-1)).
    if (name == "binomial")
        return rolling_triangle("binomial", n_max, [](long, long, Int const& c, Int const& l) {
            return Int(c + l);
        });
    if (name == "stirling2")
        return rolling_triangle("stirling2", n_max, [](long, long k, Int const& c, Int const& l) {
            return Int(k * c + l);
        });
    if (name == "stirling1")
        return rolling_triangle("stirling1", n_max, [](long n, long, Int const& c, Int const& l) {
            return Int((n - 1) * c + l);
        });
    if (name == "eulerian")
        return rolling_triangle("eulerian", n_max, [](long n, long k, Int const& c, Int const& l) {
            return Int(k * c + (n - k + 1) * l);
        });
    if (name == "narayana")
        return closed_triangle("narayana", n_max, [](long n, long k) {
            if (n == 0)
                return Int(1);
            Int v = binomial(n, k) * binomial(n, k - 1);
            mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(n));
            return v;
        });
    if (name == "morgan_voyce")
        return closed_triangle("morgan_voyce", n_max, [](long n, long k) { return binomial(n + k, n - k); });
    if (name == "squared_binomial")
        return closed_triangle("squared_binomial", n_max, [](long n, long k) {
            Int b = binomial(n, k);
            return Int(b * b);
        });
    throw error(errc::unknown_triangle, "unknown triangle '" + std::string(name) + "'");
}

Triangle stirling1_by_summation(long n_max) {
    // c(n,k) = sum_{j=k}^{n} binom(n-1,j-1) (n-j)! c(j-1,k-1),  1 <= k <= n
    Triangle t;
    t.name = "stirling1";
    t.rows.push_back({Int(1)});
    for (long n = 1; n <= n_max; ++n) {
        std::vector<Int> row(static_cast<std::size_t>(n + 1), Int(0));
        for (long k = 1; k <= n; ++k) {
            Int s = 0;
            for (long j = k; j <= n; ++j)
                s += binomial(n - 1, j - 1) * factorial(static_cast<unsigned long>(n - j)) * t.at(j - 1, k - 1);
            row[k] = s;
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

// ---------------------------------------------------------------- parsing

namespace {

using nlohmann::json;

[[noreturn]] void field_error(std::string const& field, std::string const& msg) {
    throw error(errc::parse_error, "field '" + field + "': " + msg);
}

Rat json_rat(json const& v, std::string const& field) {
    if (v.is_number_integer())
        return Rat(Int(v.dump()));
    if (v.is_string())
        try {
            return parse_rat(v.get<std::string>());
        } catch (error const&) {
            field_error(field, "not a rational: " + v.dump());
        }
    field_error(field, "expected an integer or a rational string, got " + v.dump());
}

RatPoly json_poly(json const& doc, std::string const& field) {
    if (!doc.contains(field))
        field_error(field, "missing");
    json const& v = doc.at(field);
    if (!v.is_array())
        field_error(field, "expected a coefficient list [c0, c1, ...]");
    std::vector<Rat> c;
    for (std::size_t i = 0; i < v.size(); ++i)
        c.push_back(json_rat(v[i], field + "[" + std::to_string(i) + "]"));
    return RatPoly(std::move(c));
}

long json_long(json const& doc, std::string const& field, long fallback) {
    if (!doc.contains(field))
        return fallback;
    json const& v = doc.at(field);
    if (!v.is_number_integer())
        field_error(field, "expected an integer");
    return v.get<long>();
}

Convention json_convention(json const& doc) {
    if (!doc.contains("convention"))
        return Convention::catalogue;
    auto const& v = doc.at("convention");
    if (v == "catalogue")
        return Convention::catalogue;
    if (v == "classical")
        return Convention::classical;
    field_error("convention", "expected \"catalogue\" or \"classical\"");
}

std::string line_of(std::string_view text, std::size_t byte) {
    std::size_t line = 1 + static_cast<std::size_t>(
                               std::count(text.begin(), text.begin() + static_cast<long>(std::min(byte, text.size())), '\n'));
    return std::to_string(line);
}

void validate_positivity(Recurrence3 const& r, long check_to) {
    for (long n = r.start; n <= check_to; ++n) {
        auto fail = [&](char const* what) {
            throw error(errc::validation_error,
                        std::string(what) + " at n = " + std::to_string(n) + " (checked " +
                            std::to_string(r.start) + ".." + std::to_string(check_to) + ")");
        };
        if (r.a(n) <= 0)
            fail("a_n is not positive");
        if (r.b(n) <= 0)
            fail("b_n is not positive");
        if (r.c(n) < 0)
            fail("c_n is negative");
    }
}

} // namespace

SeqSpec parse_seq_spec(std::string_view text, bool validate) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (json::parse_error const& e) {
        throw error(errc::parse_error, "line " + line_of(text, e.byte) + ": " + e.what());
    }
    if (!doc.is_object())
        throw error(errc::parse_error, "line 1: spec must be a JSON object");
    if (!doc.contains("kind") || !doc.at("kind").is_string())
        field_error("kind", "missing; expected \"named\" or \"recurrence3\"");
    std::string kind = doc.at("kind").get<std::string>();

    if (kind == "named") {
        if (!doc.contains("name") || !doc.at("name").is_string())
            field_error("name", "missing");
        NamedRequest req;
        req.name = doc.at("name").get<std::string>();
        if (!is_catalogue_name(req.name))
            throw error(errc::unknown_sequence, "unknown sequence '" + req.name + "'");
        req.convention = json_convention(doc);
        req.offset = json_long(doc, "offset", 0);
        return req;
    }
    if (kind != "recurrence3")
        field_error("kind", "expected \"named\" or \"recurrence3\", got \"" + kind + "\"");

    Recurrence3 r;
    if (!doc.contains("sign"))
        field_error("sign", "missing");
    auto const& sgn_field = doc.at("sign");
    if (sgn_field == "plus")
        r.sign = RecSign::plus;
    else if (sgn_field == "minus")
        r.sign = RecSign::minus;
    else
        field_error("sign", "expected \"plus\" or \"minus\"");
    r.alpha = json_poly(doc, "alpha");
    r.beta = json_poly(doc, "beta");
    r.gamma = json_poly(doc, "gamma");
    if (!doc.contains("initial"))
        field_error("initial", "missing");
    auto const& init = doc.at("initial");
    if (!init.is_array() || init.size() < 2)
        field_error("initial", "expected a list with at least two values");
    for (std::size_t i = 0; i < init.size(); ++i)
        r.initial.push_back(json_rat(init[i], "initial[" + std::to_string(i) + "]"));
    r.start = json_long(doc, "start", 1);
    r.offset = json_long(doc, "offset", 0);
    if (doc.contains("name")) {
        if (!doc.at("name").is_string())
            field_error("name", "expected a string");
        r.name = doc.at("name").get<std::string>();
    }
    if (r.start < 1)
        field_error("start", "must be >= 1");
    if (static_cast<long>(r.initial.size()) < r.start + 1)
        field_error("initial", "needs z_0..z_start (" + std::to_string(r.start + 1) + " values)");
    long check_to = json_long(doc, "check_to", r.start + 1000);
    if (validate)
        validate_positivity(r, check_to);
    return r;
}

namespace {

nlohmann::ordered_json rat_json(Rat const& x) {
    if (is_integer(x) && x.get_num().fits_slong_p())
        return x.get_num().get_si();
    return x.get_str();
}

nlohmann::ordered_json poly_json(RatPoly const& p) {
    auto arr = nlohmann::ordered_json::array();
    for (auto const& c : p.coeffs())
        arr.push_back(rat_json(c));
    return arr;
}

} // namespace

std::string recurrence_to_json(Recurrence3 const& rec) {
    nlohmann::ordered_json j;
    j["kind"] = "recurrence3";
    if (!rec.name.empty())
        j["name"] = rec.name;
    j["sign"] = rec.sign == RecSign::plus ? "plus" : "minus";
    j["alpha"] = poly_json(rec.alpha);
    j["beta"] = poly_json(rec.beta);
    j["gamma"] = poly_json(rec.gamma);
    auto init = nlohmann::ordered_json::array();
    for (auto const& z : rec.initial)
        init.push_back(rat_json(z));
    j["initial"] = init;
    j["start"] = rec.start;
    j["offset"] = rec.offset;
    return j.dump();
}

SeqSpec load_seq_spec(std::string const& arg) {
    if (is_catalogue_name(arg))
        return NamedRequest{arg, Convention::catalogue, 0};
    std::ifstream in(arg);
    if (!in)
        throw error(errc::unknown_sequence, "unknown sequence '" + arg + "' (not in the catalogue, no such file)");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_seq_spec(ss.str());
}

Recurrence3 spec_recurrence(SeqSpec const& spec) {
    if (auto const* r = std::get_if<Recurrence3>(&spec))
        return *r;
    auto const& req = std::get<NamedRequest>(spec);
    if (!has_catalogue_recurrence(req.name))
        throw error(errc::inapplicable, "'" + req.name + "' has no three-term recurrence");
    Recurrence3 r = catalogue_recurrence(req.name, req.convention);
    if (req.offset != 0)
        r.offset = req.offset;
    return r;
}

Seq spec_terms(SeqSpec const& spec, long n_max) {
    if (auto const* r = std::get_if<Recurrence3>(&spec)) {
        Seq s = gen_from_recurrence3(*r, std::max<long>(n_max, 1)).to_seq(r->name, r->offset);
        s.values.resize(static_cast<std::size_t>(n_max + 1));
        return s;
    }
    auto const& req = std::get<NamedRequest>(spec);
    Seq s = gen_named(req.name, n_max, req.convention);
    if (req.offset != 0)
        s.offset = req.offset;
    return s;
}

} // namespace lcx
