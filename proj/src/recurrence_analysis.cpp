#include "lcx/recurrence_analysis.hpp"

#include "lcx/error.hpp"

#include <cctype>
#include <sstream>

namespace lcx {

namespace {

using ojson = nlohmann::ordered_json;

std::vector<Rat> terms_of(Recurrence3 const& rec, long n_max) {
    return gen_from_recurrence3(rec, std::max<long>(n_max, 1)).values;
}

void require_plus(Recurrence3 const& rec, char const* theorem) {
    if (rec.sign != RecSign::plus)
        throw error(errc::inapplicable, std::string(theorem) + " needs a plus-form recurrence");
    if (rec.start != 1)
        throw error(errc::inapplicable, std::string(theorem) + " needs the recurrence to start at n = 1");
}

void require_minus(Recurrence3 const& rec, char const* theorem) {
    if (rec.sign != RecSign::minus)
        throw error(errc::inapplicable, std::string(theorem) + " needs a minus-form recurrence");
    if (rec.start != 1)
        throw error(errc::inapplicable, std::string(theorem) + " needs the recurrence to start at n = 1");
}

std::string approx_str(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

std::string index_list(std::vector<long> const& v) {
    std::string s;
    for (long i : v)
        s += (s.empty() ? "" : ",") + std::to_string(i);
    return s;
}

/// a_n > 0, b_n > 0, c_n >= 0 on [lo, hi]; returns the indices with c_n = 0.
/// Throws non_positive_coefficient.
std::vector<long> scan_coefficients(Recurrence3 const& rec, long lo, long hi) {
    std::vector<long> zeros;
    for (long n = lo; n <= hi; ++n) {
        if (rec.a(n) <= 0 || rec.b(n) <= 0 || rec.c(n) < 0)
            throw error(errc::non_positive_coefficient,
                        "coefficients at n = " + std::to_string(n) + " are (" + rec.a(n).get_str() + ", " +
                            rec.b(n).get_str() + ", " + rec.c(n).get_str() + "); need a, b > 0 and c >= 0");
        if (rec.c(n) == 0)
            zeros.push_back(n);
    }
    return zeros;
}

HypothesisCheck coefficient_hypothesis(std::vector<long> const& zeros, long lo, long hi) {
    HypothesisCheck h{"coefficients",
                      "a_n > 0, b_n > 0, c_n >= 0 for " + std::to_string(lo) + " <= n <= " + std::to_string(hi),
                      true, std::nullopt, ""};
    if (!zeros.empty())
        h.detail = "c_n = 0 at n = " + index_list(zeros);
    return h;
}

HypothesisCheck positive_terms(std::vector<Rat> const& z, long lo, long hi) {
    HypothesisCheck h{"positive_terms",
                      "z_n > 0 for " + std::to_string(lo) + " <= n <= " + std::to_string(hi), true, std::nullopt,
                      ""};
    for (long n = lo; n <= hi; ++n) {
        if (z[static_cast<std::size_t>(n)] <= 0) {
            h.holds = false;
            h.witness_index = n;
            h.detail = "z_" + std::to_string(n) + " = " + z[static_cast<std::size_t>(n)].get_str();
            break;
        }
    }
    return h;
}

/// Log-convexity (or concavity) of z_lo..z_hi in product form.
HypothesisCheck seed_hypothesis(std::vector<Rat> const& z, long lo, long hi, ConvexityMode mode) {
    bool convex = mode == ConvexityMode::convex;
    HypothesisCheck h{"seed",
                      "z_" + std::to_string(lo) + "..z_" + std::to_string(hi) +
                          (convex ? " is log-convex" : " is log-concave"),
                      true, std::nullopt, ""};
    for (long k = lo + 1; k < hi; ++k) {
        Rat lhs = z[static_cast<std::size_t>(k - 1)] * z[static_cast<std::size_t>(k + 1)];
        Rat rhs = z[static_cast<std::size_t>(k)] * z[static_cast<std::size_t>(k)];
        if (convex ? lhs < rhs : lhs > rhs) {
            h.holds = false;
            h.witness_index = k;
            h.detail = "z_{k-1} z_{k+1} = " + lhs.get_str() + (convex ? " < " : " > ") + "z_k^2 = " + rhs.get_str();
            break;
        }
    }
    return h;
}

ojson base_params(char const* theorem, Recurrence3 const& rec, long n_max) {
    return ojson{{"theorem", theorem}, {"recurrence", ojson::parse(recurrence_to_json(rec))}, {"n_max", n_max}};
}

Certificate crit_plus_like(Recurrence3 const& rec, long n_max, ConvexityMode mode) {
    bool convex = mode == ConvexityMode::convex;
    char const* theorem = convex ? "crit_plus" : "lc_plus";
    require_plus(rec, theorem);
    if (n_max < 2)
        throw error(errc::range_error, "n_max must be >= 2");
    Certificate cert;
    cert.theorem = theorem;
    cert.target = rec.name;
    cert.range_lo = 0;
    cert.range_hi = n_max + 1;
    cert.params = base_params(theorem, rec, n_max);

    auto zeros = scan_coefficients(rec, 1, n_max + 1);
    cert.add(coefficient_hypothesis(zeros, 1, n_max + 1));
    std::vector<Rat> z = terms_of(rec, std::max<long>(n_max + 1, 3));
    cert.add(positive_terms(z, 0, n_max + 1));
    cert.add(seed_hypothesis(z, 0, 3, mode));

    HypothesisCheck ineq{"inequality",
                         std::string("a_n lambda_{n-1} lambda_{n+1} - b_n lambda_{n-1} - c_n ") +
                             (convex ? ">= 0" : "<= 0") + " for 2 <= n <= " + std::to_string(n_max),
                         true, std::nullopt, ""};
    long zero_count = 0;
    std::vector<QuadSurd> lambda(static_cast<std::size_t>(n_max + 2));
    for (long n = 1; n <= n_max + 1; ++n)
        lambda[static_cast<std::size_t>(n)] = lambda_n(rec, n);
    for (long n = 2; n <= n_max; ++n) {
        SurdExpr lm = lambda[static_cast<std::size_t>(n - 1)].expr();
        SurdExpr res = lm * lambda[static_cast<std::size_t>(n + 1)].expr() * rec.a(n) - lm * rec.b(n) - SurdExpr(rec.c(n));
        int s = res.sign();
        if (s == 0)
            ++zero_count;
        if (convex ? s < 0 : s > 0) {
            ineq.holds = false;
            ineq.witness_index = n;
            ineq.detail = "residual at n = " + std::to_string(n) + " is " + res.to_string() + " (approx " +
                          approx_str(res.approx()) + ")";
            break;
        }
    }
    cert.add(ineq);
    cert.data["residual_zero_count"] = zero_count;
    std::string what = convex ? "log-convex" : "log-concave";
    cert.conclusion = cert.certified() ? "z_0..z_" + std::to_string(n_max + 1) + " is " + what
                                       : "hypotheses not met; no conclusion";
    return cert;
}

// ------------------------------------------------------------ RatFunc parse

RatPoly parse_poly_text(std::string s, std::string const& whole) {
    auto fail = [&](std::string const& why) -> RatPoly {
        throw error(errc::parse_error, "cannot parse rational function '" + whole + "': " + why);
    };
    while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        int depth = 0;
        bool wraps = true;
        for (std::size_t i = 0; i < s.size(); ++i) {
            depth += s[i] == '(' ? 1 : s[i] == ')' ? -1 : 0;
            if (depth == 0 && i + 1 < s.size())
                wraps = false;
        }
        if (!wraps)
            break;
        s = s.substr(1, s.size() - 2);
    }
    if (s.empty())
        return fail("empty polynomial");
    std::vector<Rat> coeffs;
    std::size_t i = 0;
    bool first = true;
    while (i < s.size()) {
        int sgn_ = 1;
        if (s[i] == '+' || s[i] == '-') {
            sgn_ = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            return fail("expected + or - at position " + std::to_string(i));
        }
        first = false;
        std::size_t d0 = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            ++i;
        bool has_num = i > d0;
        Int coef = has_num ? Int(s.substr(d0, i - d0)) : Int(1);
        if (has_num && i < s.size() && s[i] == '*')
            ++i;
        std::size_t power = 0;
        if (i < s.size() && s[i] == 'n') {
            ++i;
            power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t p0 = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                    ++i;
                if (i == p0)
                    return fail("missing exponent");
                power = std::stoul(s.substr(p0, i - p0));
            }
        } else if (!has_num) {
            return fail("unexpected character at position " + std::to_string(i));
        }
        if (coeffs.size() <= power)
            coeffs.resize(power + 1);
        coeffs[power] += Rat(sgn_ * coef);
    }
    return RatPoly(std::move(coeffs));
}

} // namespace

// ------------------------------------------------------------------ lambda

QuadSurd lambda_n(Recurrence3 const& rec, long n) {
    Rat a = rec.a(n), b = rec.b(n), c = rec.c(n);
    if (a <= 0 || b <= 0 || c < 0)
        throw error(errc::non_positive_coefficient, "lambda_" + std::to_string(n) + " needs a_n, b_n > 0 and c_n >= 0");
    Rat inv = 1 / (2 * a);
    return QuadSurd::make(b * inv, inv, b * b + 4 * a * c);
}

SurdExpr lambda_residual(Recurrence3 const& rec, long n, QuadSurd const& lambda) {
    SurdExpr l = lambda.expr();
    return l * l * rec.a(n) - l * rec.b(n) - SurdExpr(rec.c(n));
}

Certificate check_interlacing(Recurrence3 const& rec, long n_max) {
    require_plus(rec, "interlacing");
    if (n_max < 1)
        throw error(errc::range_error, "n_max must be >= 1");
    Certificate cert;
    cert.theorem = "interlacing";
    cert.target = rec.name;
    cert.range_lo = 1;
    cert.range_hi = n_max;
    cert.params = base_params("interlacing", rec, n_max);
    auto zeros = scan_coefficients(rec, 1, n_max);
    cert.add(coefficient_hypothesis(zeros, 1, n_max));
    std::vector<Rat> z = terms_of(rec, n_max + 1);
    HypothesisCheck pos = positive_terms(z, 0, n_max + 1);
    cert.add(pos);
    if (!pos.holds) {
        cert.conclusion = "ratios undefined";
        return cert;
    }
    HypothesisCheck h{"interlacing", "x_{n-1} <= lambda_n <= x_n for 1 <= n <= " + std::to_string(n_max), true,
                      std::nullopt, ""};
    for (long n = 1; n <= n_max; ++n) {
        QuadSurd lam = lambda_n(rec, n);
        Rat x_prev = z[static_cast<std::size_t>(n)] / z[static_cast<std::size_t>(n - 1)];
        Rat x_cur = z[static_cast<std::size_t>(n + 1)] / z[static_cast<std::size_t>(n)];
        bool left = compare(lam, x_prev) != std::strong_ordering::less;
        bool right = compare(lam, x_cur) != std::strong_ordering::greater;
        if (!left || !right) {
            h.holds = false;
            h.witness_index = n;
            h.detail = !left ? "x_{n-1} = " + x_prev.get_str() + " > lambda_n = " + lam.to_string()
                             : "lambda_n = " + lam.to_string() + " > x_n = " + x_cur.get_str();
            break;
        }
    }
    cert.add(h);
    cert.conclusion = cert.certified() ? "ratios increasing: z_0..z_" + std::to_string(n_max + 1) + " is log-convex"
                                       : "interlacing broken";
    return cert;
}

SurdExpr crit_plus_residual(Recurrence3 const& rec, long n) {
    SurdExpr lm = lambda_n(rec, n - 1).expr();
    SurdExpr lp = lambda_n(rec, n + 1).expr();
    return lm * lp * rec.a(n) - lm * rec.b(n) - SurdExpr(rec.c(n));
}

Certificate check_thm_crit_plus(Recurrence3 const& rec, long n_max) {
    return crit_plus_like(rec, n_max, ConvexityMode::convex);
}

Certificate check_thm_lc_plus(Recurrence3 const& rec, long n_max) {
    return crit_plus_like(rec, n_max, ConvexityMode::concave);
}

// -------------------------------------------------------------------- mu

Rat RatFunc::operator()(long n) const {
    Rat d = den.eval(Rat(n));
    if (d == 0)
        throw error(errc::range_error, "mu denominator vanishes at n = " + std::to_string(n));
    return num.eval(Rat(n)) / d;
}

RatFunc parse_ratfunc(std::string const& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s += ch;
    int depth = 0;
    std::size_t slash = std::string::npos;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(')
            ++depth;
        else if (s[i] == ')')
            --depth;
        else if (s[i] == '/' && depth == 0) {
            if (slash != std::string::npos)
                throw error(errc::parse_error, "cannot parse rational function '" + text + "': more than one '/'");
            slash = i;
        }
        if (depth < 0)
            throw error(errc::parse_error, "cannot parse rational function '" + text + "': unbalanced parentheses");
    }
    if (depth != 0)
        throw error(errc::parse_error, "cannot parse rational function '" + text + "': unbalanced parentheses");
    RatFunc f;
    f.text = text;
    if (slash == std::string::npos) {
        f.num = parse_poly_text(s, text);
    } else {
        f.num = parse_poly_text(s.substr(0, slash), text);
        f.den = parse_poly_text(s.substr(slash + 1), text);
    }
    if (f.den.is_zero())
        throw error(errc::parse_error, "cannot parse rational function '" + text + "': zero denominator");
    return f;
}

Rat c_plus_residual(Recurrence3 const& rec, RatFunc const& mu, long n) {
    Rat m_prev = mu(n - 1);
    return rec.a(n) * m_prev * mu(n + 1) - rec.b(n) * m_prev - rec.c(n);
}

Certificate check_thm_c_plus(Recurrence3 const& rec, RatFunc const& mu, long n_max) {
    require_plus(rec, "c_plus");
    if (n_max < 2)
        throw error(errc::range_error, "n_max must be >= 2");
    for (long n = 1; n <= n_max + 1; ++n)
        if (mu(n) <= 0)
            throw error(errc::non_positive_mu, "mu_" + std::to_string(n) + " = " + mu(n).get_str() + " is not positive");
    Certificate cert;
    cert.theorem = "c_plus";
    cert.target = rec.name;
    cert.range_lo = 0;
    cert.range_hi = n_max + 1;
    cert.params = base_params("c_plus", rec, n_max);
    cert.params["mu"] = mu.text;
    cert.data["mu"] = mu.text;

    auto zeros = scan_coefficients(rec, 1, n_max + 1);
    cert.add(coefficient_hypothesis(zeros, 1, n_max + 1));
    std::vector<Rat> z = terms_of(rec, n_max + 1);
    cert.add(positive_terms(z, 0, n_max + 1));

    HypothesisCheck h1{"i", "mu_n <= lambda_n for 1 <= n <= " + std::to_string(n_max + 1), true, std::nullopt, ""};
    for (long n = 1; n <= n_max + 1; ++n) {
        QuadSurd lam = lambda_n(rec, n);
        if (compare(lam, mu(n)) == std::strong_ordering::less) {
            h1.holds = false;
            h1.witness_index = n;
            h1.detail = "mu_n = " + mu(n).get_str() + " > lambda_n = " + lam.to_string() + " (approx " +
                        approx_str(lam.approx()) + ")";
            break;
        }
    }
    cert.add(h1);

    HypothesisCheck h2{"ii", "z_1 <= mu_1 z_0 and z_2 <= mu_2 z_1", true, std::nullopt, ""};
    for (long n = 1; n <= 2; ++n) {
        Rat lhs = z[static_cast<std::size_t>(n)];
        Rat rhs = mu(n) * z[static_cast<std::size_t>(n - 1)];
        if (lhs > rhs) {
            h2.holds = false;
            h2.witness_index = n;
            h2.detail = "z_" + std::to_string(n) + " = " + lhs.get_str() + " > " + rhs.get_str();
            break;
        }
    }
    cert.add(h2);

    HypothesisCheck h3{"iii", "a_n mu_{n-1} mu_{n+1} - b_n mu_{n-1} - c_n >= 0 for 2 <= n <= " + std::to_string(n_max),
                       true, std::nullopt, ""};
    for (long n = 2; n <= n_max; ++n) {
        Rat r = c_plus_residual(rec, mu, n);
        if (r < 0) {
            h3.holds = false;
            h3.witness_index = n;
            h3.detail = "residual " + r.get_str();
            break;
        }
    }
    cert.add(h3);
    auto samples = ojson::array();
    for (long n = 2; n <= std::min<long>(n_max, 6); ++n)
        samples.push_back({{"n", n}, {"residual", c_plus_residual(rec, mu, n).get_str()}});
    cert.data["residual_samples"] = samples;
    cert.conclusion = cert.certified() ? "z_0..z_" + std::to_string(n_max + 1) + " is log-convex"
                                       : "hypotheses not met; no conclusion";
    return cert;
}

std::vector<Rat> suggest_mu_lower_bounds(Recurrence3 const& rec, long n_lo, long n_hi, unsigned bits) {
    std::vector<Rat> out;
    Int scale = Int(1) << bits;
    for (long n = n_lo; n <= n_hi; ++n) {
        Rat a = rec.a(n), b = rec.b(n), c = rec.c(n);
        if (a <= 0 || b <= 0 || c < 0)
            throw error(errc::non_positive_coefficient, "coefficients not positive at n = " + std::to_string(n));
        Rat disc = b * b + 4 * a * c;
        // sqrt(u/v) >= floor(sqrt(u v 4^bits)) / (v 2^bits)
        Int uv = disc.get_num() * disc.get_den() * scale * scale;
        Int root;
        mpz_sqrt(root.get_mpz_t(), uv.get_mpz_t());
        Rat sqrt_lo = make_rat(root, disc.get_den() * scale);
        Rat lam_lo = (b + sqrt_lo) / (2 * a);
        Int fl;
        Int num = lam_lo.get_num() * scale;
        mpz_fdiv_q(fl.get_mpz_t(), num.get_mpz_t(), lam_lo.get_den().get_mpz_t());
        out.push_back(make_rat(fl, scale));
    }
    return out;
}

// --------------------------------------------------------------- minus form

ABCTriple compute_ABC(Recurrence3 const& rec) {
    if (rec.alpha.degree() > 1 || rec.beta.degree() > 1 || rec.gamma.degree() > 1)
        throw error(errc::nonlinear_coefficients, "A, B, C need coefficients of degree <= 1");
    Rat a0 = rec.alpha.coeff(0), a1 = rec.alpha.coeff(1);
    Rat b0 = rec.beta.coeff(0), b1 = rec.beta.coeff(1);
    Rat g0 = rec.gamma.coeff(0), g1 = rec.gamma.coeff(1);
    ABCTriple t{Rat(b0 * g1 - b1 * g0), Rat(g0 * a1 - g1 * a0), Rat(a0 * b1 - a1 * b0)};
    // a_n A + b_n B + c_n C vanishes identically in n
    if (a0 * t.A + b0 * t.B + g0 * t.C != 0 || a1 * t.A + b1 * t.B + g1 * t.C != 0)
        throw std::logic_error("determinant identity a_n A + b_n B + c_n C = 0 failed");
    return t;
}

Certificate check_thm_c_minus(Recurrence3 const& rec, long n_max, long anchor, ConvexityMode mode) {
    bool convex = mode == ConvexityMode::convex;
    char const* theorem = convex ? "c_minus" : "c_minus_lc";
    require_minus(rec, theorem);
    ABCTriple abc = compute_ABC(rec);
    if (anchor < 0)
        throw error(errc::range_error, "anchor must be >= 0");
    if (n_max < anchor + 1)
        throw error(errc::range_error, "n_max must exceed the anchor");
    Certificate cert;
    cert.theorem = theorem;
    cert.target = rec.name;
    cert.range_lo = anchor;
    cert.range_hi = n_max + 2;
    cert.params = base_params(theorem, rec, n_max);
    cert.params["anchor"] = anchor;
    cert.data["A"] = abc.A.get_str();
    cert.data["B"] = abc.B.get_str();
    cert.data["C"] = abc.C.get_str();
    cert.data["anchor"] = anchor;

    long lo = std::max<long>(anchor, 1);
    auto zeros = scan_coefficients(rec, lo, n_max + 1);
    cert.add(coefficient_hypothesis(zeros, lo, n_max + 1));
    std::vector<Rat> z = terms_of(rec, n_max + 2);
    cert.add(positive_terms(z, anchor, n_max + 2));
    cert.add(seed_hypothesis(z, anchor, anchor + 2, mode));

    Rat const& A = abc.A;
    Rat const& B = abc.B;
    Rat const& C = abc.C;
    Rat w = z[static_cast<std::size_t>(anchor)] * B + z[static_cast<std::size_t>(anchor + 1)] * C;
    Rat ac = A * C, bb = B * B;
    cert.data["zB_plus_zC"] = w.get_str();
    cert.data["AC"] = ac.get_str();
    cert.data["B2"] = bb.get_str();

    struct Cond {
        char const* id;
        bool applies;
        std::string statement;
    };
    std::vector<Cond> conds;
    if (convex) {
        conds = {
            {"i", B >= 0 && C >= 0, "B >= 0, C >= 0"},
            {"ii", B < 0 && C > 0 && ac >= bb && w >= 0, "B < 0, C > 0, AC >= B^2, z_m B + z_{m+1} C >= 0"},
            {"iii", B > 0 && C < 0 && ac <= bb && w >= 0, "B > 0, C < 0, AC <= B^2, z_m B + z_{m+1} C >= 0"},
        };
    } else {
        conds = {
            {"i", B <= 0 && C <= 0, "B <= 0, C <= 0"},
            {"ii", B < 0 && C > 0 && ac <= bb && w <= 0, "B < 0, C > 0, AC <= B^2, z_m B + z_{m+1} C <= 0"},
            {"iii", B > 0 && C < 0 && ac >= bb && w <= 0, "B > 0, C < 0, AC >= B^2, z_m B + z_{m+1} C <= 0"},
        };
    }
    ojson cj = ojson::object();
    std::optional<std::string> chosen;
    for (auto const& c : conds) {
        cj[c.id] = {{"statement", c.statement}, {"holds", c.applies}};
        if (c.applies && !chosen)
            chosen = c.id;
    }
    cert.data["conditions"] = cj;
    cert.data["condition"] = chosen ? ojson(*chosen) : ojson(nullptr);
    HypothesisCheck hc{"condition", "one of the conditions (i), (ii), (iii) holds", chosen.has_value(),
                       std::nullopt, chosen ? "condition (" + *chosen + ")" : "no condition satisfied"};
    cert.add(hc);

    // The criterion speaks about z_m, z_{m+1}, ...; report whether the
    // terms before the anchor keep the property.
    if (anchor > 0) {
        bool prefix_ok = seed_hypothesis(z, 0, anchor + 2, mode).holds;
        cert.data["prefix_included"] = prefix_ok;
    }
    std::string what = convex ? "log-convex" : "log-concave";
    if (cert.certified()) {
        bool from_zero = anchor == 0 || cert.data.value("prefix_included", false);
        cert.conclusion = "z_" + std::to_string(from_zero ? 0 : anchor) + "..z_" + std::to_string(n_max + 2) +
                          " is " + what + " (condition (" + *chosen + "))";
    } else {
        cert.conclusion = "hypotheses not met; no conclusion";
    }
    return cert;
}

// ---------------------------------------------------------------- bisection

Certificate bisection_analysis(Recurrence3 const& rec, long n_max) {
    require_plus(rec, "bisection");
    if (rec.alpha.degree() > 0 || rec.beta.degree() > 0 || rec.gamma.degree() > 0)
        throw error(errc::non_constant_coefficients, "bisection analysis needs constant a, b, c");
    if (n_max < 5)
        throw error(errc::range_error, "n_max must be >= 5");
    Rat a = rec.a(0), b = rec.b(0), c = rec.c(0);
    if (a <= 0 || b <= 0 || c <= 0)
        throw error(errc::non_positive_coefficient, "bisection analysis needs a, b, c > 0");

    Certificate cert;
    cert.theorem = "bisection";
    cert.target = rec.name;
    cert.range_lo = 0;
    cert.range_hi = n_max;
    cert.params = base_params("bisection", rec, n_max);

    std::vector<Rat> z = terms_of(rec, n_max);
    cert.add(positive_terms(z, 0, n_max));
    auto Z = [&](long i) -> Rat const& { return z[static_cast<std::size_t>(i)]; };

    HypothesisCheck sq{"squared_recurrence",
                       "a^2 z_{n+2} = (b^2 + 2ac) z_n - c^2 z_{n-2} for 2 <= n <= " + std::to_string(n_max - 2), true,
                       std::nullopt, ""};
    for (long n = 2; n + 2 <= n_max; ++n) {
        if (a * a * Z(n + 2) != (b * b + 2 * a * c) * Z(n) - c * c * Z(n - 2)) {
            sq.holds = false;
            sq.witness_index = n;
            break;
        }
    }
    cert.add(sq);

    Rat d01 = Z(0) * Z(2) - Z(1) * Z(1);
    Rat lhs_even = a * a * (Z(0) * Z(4) - Z(2) * Z(2));
    Rat rhs_even = b * b * d01;
    Rat lhs_odd = a * a * a * (Z(1) * Z(5) - Z(3) * Z(3));
    Rat rhs_odd = b * b * c * (-d01);
    cert.add({"identity_even", "a^2 (z_0 z_4 - z_2^2) = b^2 (z_0 z_2 - z_1^2)", lhs_even == rhs_even, std::nullopt,
              lhs_even.get_str() + " = " + rhs_even.get_str()});
    cert.add({"identity_odd", "a^3 (z_1 z_5 - z_3^2) = b^2 c (z_1^2 - z_0 z_2)", lhs_odd == rhs_odd, std::nullopt,
              lhs_odd.get_str() + " = " + rhs_odd.get_str()});
    cert.data["identity_even"] = {{"lhs", lhs_even.get_str()}, {"rhs", rhs_even.get_str()}};
    cert.data["identity_odd"] = {{"lhs", lhs_odd.get_str()}, {"rhs", rhs_odd.get_str()}};
    cert.data["squared_recurrence"] = {{"a2", Rat(a * a).get_str()},
                                       {"b2_plus_2ac", Rat(b * b + 2 * a * c).get_str()},
                                       {"c2", Rat(c * c).get_str()}};

    // Each bisection satisfies a constant minus-form recurrence, so its
    // first three terms decide log-convexity / log-concavity.
    auto verdict = [](Rat const& y0, Rat const& y1, Rat const& y2) -> std::string {
        int s = sgn(y0 * y2 - y1 * y1);
        return s > 0 ? "log-convex" : s < 0 ? "log-concave" : "log-convex and log-concave";
    };
    std::string even = verdict(Z(0), Z(2), Z(4));
    std::string odd = verdict(Z(1), Z(3), Z(5));
    cert.data["even"] = even;
    cert.data["odd"] = odd;
    cert.data["seed_z0z2_minus_z1sq"] = d01.get_str();
    cert.conclusion = "{z_2n} is " + even + "; {z_2n+1} is " + odd;
    return cert;
}

} // namespace lcx
