#include "lcx/surd.hpp"

#include "lcx/error.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <vector>

namespace lcx {

namespace {

// Trial division stops here; beyond it split_square only strips a remaining
// perfect square and reports certified = false.
constexpr unsigned long kTrialLimit = 1UL << 21;

bool is_perfect_square(Int const& m) { return mpz_perfect_square_p(m.get_mpz_t()) != 0; }

Int isqrt(Int const& m) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Pairwise-coprime base: every input is a product of powers of the result.
std::vector<Int> coprime_base(std::vector<Int> items) {
    std::erase_if(items, [](Int const& x) { return x <= 1; });
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < items.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < items.size() && !changed; ++j) {
                if (items[i] == items[j]) {
                    items.erase(items.begin() + static_cast<long>(j));
                    changed = true;
                    break;
                }
                Int g = gcd(items[i], items[j]);
                if (g == 1)
                    continue;
                Int a = items[i] / g;
                Int b = items[j] / g;
                items.erase(items.begin() + static_cast<long>(j));
                items.erase(items.begin() + static_cast<long>(i));
                for (Int* x : {&a, &b, &g})
                    if (*x > 1)
                        items.push_back(*x);
                changed = true;
            }
        }
    }
    std::sort(items.begin(), items.end());
    return items;
}

} // namespace

SquareSplit split_square(Int const& m) {
    if (m < 0)
        throw error(errc::range_error, "negative radicand");
    SquareSplit out{1, 1, true};
    if (m == 0) {
        out.square_root = 0;
        return out;
    }
    Int rest = m;
    auto strip = [&](unsigned long p) {
        unsigned exp = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++exp;
        }
        for (unsigned e = 0; e + 1 < exp; e += 2)
            out.square_root *= p;
        if (exp % 2 == 1)
            out.remainder *= p;
    };
    strip(2);
    unsigned long p = 3;
    for (; p <= kTrialLimit; p += 2) {
        // rest < p^3 leaves at most two prime factors, all >= p
        Int cube = Int(p) * p * p;
        if (cube > rest)
            break;
        strip(p);
    }
    if (rest > 1) {
        if (is_perfect_square(rest)) {
            out.square_root *= isqrt(rest);
        } else {
            out.remainder *= rest;
            if (p > kTrialLimit)
                out.certified = false;
        }
    }
    return out;
}

// ---------------------------------------------------------------- QuadSurd

QuadSurd QuadSurd::make(Rat const& p, Rat const& q, Rat const& radicand) {
    if (radicand < 0)
        throw error(errc::range_error, "negative radicand " + radicand.get_str());
    QuadSurd s;
    s.p_ = p;
    if (q == 0 || radicand == 0)
        return s;
    // sqrt(u/v) = sqrt(u*v)/v
    Int uv = radicand.get_num() * radicand.get_den();
    SquareSplit sp = split_square(uv);
    Rat coeff = q * Rat(sp.square_root) / Rat(radicand.get_den());
    if (sp.remainder == 1) {
        s.p_ += coeff;
        return s;
    }
    s.q_ = coeff;
    s.d_ = sp.remainder;
    s.certified_ = sp.certified;
    return s;
}

SurdExpr QuadSurd::expr() const {
    SurdExpr e(p_);
    if (!is_rational())
        e += SurdExpr::term(q_, d_);
    return e;
}

int QuadSurd::sign() const { return expr().sign(); }

double QuadSurd::approx() const { return expr().approx(); }

std::string QuadSurd::to_string() const {
    if (is_rational())
        return p_.get_str();
    std::ostringstream os;
    os << p_.get_str() << " + " << q_.get_str() << "*sqrt(" << d_.get_str() << ")";
    return os.str();
}

bool QuadSurd::operator==(QuadSurd const& other) const {
    if (certified_ && other.certified_)
        return p_ == other.p_ && q_ == other.q_ && d_ == other.d_;
    return (expr() - other.expr()).is_zero();
}

std::strong_ordering compare(QuadSurd const& a, QuadSurd const& b) {
    int s = (a.expr() - b.expr()).sign();
    return s < 0 ? std::strong_ordering::less
                 : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::strong_ordering compare(QuadSurd const& a, Rat const& b) {
    return compare(a, QuadSurd(b));
}

// ---------------------------------------------------------------- SurdExpr

SurdExpr::SurdExpr(Rat const& r) {
    if (r != 0)
        terms_.emplace(Int(1), r);
}

SurdExpr SurdExpr::term(Rat const& t, Int const& m) {
    if (m < 1)
        throw error(errc::range_error, "radicand must be >= 1");
    SurdExpr e;
    e.add_term(m, t);
    return e;
}

void SurdExpr::add_term(Int const& m, Rat const& t) {
    if (t == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, t);
    if (!inserted) {
        it->second += t;
        if (it->second == 0)
            terms_.erase(it);
    }
}

SurdExpr& SurdExpr::operator+=(SurdExpr const& o) {
    for (auto const& [m, t] : o.terms_)
        add_term(m, t);
    return *this;
}

SurdExpr& SurdExpr::operator-=(SurdExpr const& o) {
    for (auto const& [m, t] : o.terms_)
        add_term(m, -t);
    return *this;
}

SurdExpr& SurdExpr::operator*=(Rat const& r) {
    if (r == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, t] : terms_)
        t *= r;
    return *this;
}

SurdExpr operator*(SurdExpr const& a, SurdExpr const& b) {
    SurdExpr out;
    for (auto const& [m1, t1] : a.terms_) {
        for (auto const& [m2, t2] : b.terms_) {
            // sqrt(m1) sqrt(m2) = g sqrt((m1/g)(m2/g)),  g = gcd(m1, m2)
            Int g = gcd(m1, m2);
            Int m = (m1 / g) * (m2 / g);
            out.add_term(m, Rat(t1 * t2) * Rat(g));
        }
    }
    return out;
}

namespace {

// The expression rewritten as sum over subsets S of a coprime base of
// coeff[S] * prod_{i in S} sqrt(base[i]), with square base elements folded
// into the coefficients.
struct Multilinear {
    std::vector<Int> base;
    std::map<unsigned long, Rat> coeff;
};

Multilinear to_multilinear(std::map<Int, Rat> const& terms) {
    std::vector<Int> radicands;
    for (auto const& kv : terms)
        if (kv.first > 1)
            radicands.push_back(kv.first);
    Multilinear ml;
    std::vector<Int> base = coprime_base(radicands);
    std::vector<bool> square(base.size());
    std::vector<Int> root(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        square[i] = is_perfect_square(base[i]);
        if (square[i])
            root[i] = isqrt(base[i]);
    }
    // non-square base elements get mask bits
    std::vector<int> bit(base.size(), -1);
    for (std::size_t i = 0; i < base.size(); ++i) {
        if (!square[i]) {
            bit[i] = static_cast<int>(ml.base.size());
            ml.base.push_back(base[i]);
        }
    }
    if (ml.base.size() >= 8 * sizeof(unsigned long))
        throw error(errc::range_error, "too many independent radicands");
    for (auto const& [m, t] : terms) {
        Int rest = m;
        Rat c = t;
        unsigned long mask = 0;
        for (std::size_t i = 0; i < base.size() && rest > 1; ++i) {
            unsigned exp = 0;
            while (mpz_divisible_p(rest.get_mpz_t(), base[i].get_mpz_t())) {
                rest /= base[i];
                ++exp;
            }
            for (unsigned e = 0; e + 1 < exp; e += 2)
                c *= Rat(base[i]);
            if (exp % 2 == 1) {
                if (square[i])
                    c *= Rat(root[i]);
                else
                    mask |= 1UL << bit[i];
            }
        }
        assert(rest == 1);
        auto [it, inserted] = ml.coeff.try_emplace(mask, c);
        if (!inserted)
            it->second += c;
    }
    std::erase_if(ml.coeff, [](auto const& kv) { return kv.second == 0; });
    return ml;
}

} // namespace

bool SurdExpr::is_zero() const {
    if (terms_.size() <= 1)
        return terms_.empty();
    return to_multilinear(terms_).coeff.empty();
}

int SurdExpr::sign() const {
    if (terms_.empty())
        return 0;
    if (terms_.size() == 1)
        return sgn(terms_.begin()->second);

    Multilinear ml = to_multilinear(terms_);
    if (ml.coeff.empty())
        return 0;
    if (ml.coeff.size() == 1)
        return sgn(ml.coeff.begin()->second);

    // Scale coefficients to integers.
    Int den = 1;
    for (auto const& kv : ml.coeff)
        den = lcm(den, Int(kv.second.get_den()));
    std::vector<std::pair<unsigned long, Int>> ic;
    for (auto const& [mask, c] : ml.coeff)
        ic.emplace_back(mask, Int(c.get_num() * (den / c.get_den())));

    std::size_t nb = ml.base.size();
    for (unsigned long bits = 64;; bits *= 2) {
        // sqrt(b) in (lo, lo+1) / 2^bits, strict since b is not a square
        std::vector<Int> lo(nb), hi(nb);
        for (std::size_t i = 0; i < nb; ++i) {
            Int scaled = ml.base[i] << (2 * bits);
            lo[i] = isqrt(scaled);
            hi[i] = lo[i] + 1;
        }
        // every monomial is scaled to the common factor 2^(bits * nb)
        Int sum_lo = 0, sum_hi = 0;
        for (auto const& [mask, c] : ic) {
            Int mlo = 1, mhi = 1;
            unsigned long missing = 0;
            for (std::size_t i = 0; i < nb; ++i) {
                if (mask & (1UL << i)) {
                    mlo *= lo[i];
                    mhi *= hi[i];
                } else {
                    ++missing;
                }
            }
            mlo <<= bits * missing;
            mhi <<= bits * missing;
            if (c > 0) {
                sum_lo += c * mlo;
                sum_hi += c * mhi;
            } else {
                sum_lo += c * mhi;
                sum_hi += c * mlo;
            }
        }
        if (sum_lo > 0)
            return 1;
        if (sum_hi < 0)
            return -1;
    }
}

double SurdExpr::approx() const {
    double acc = 0;
    for (auto const& [m, t] : terms_) {
        double root = 1.0;
        if (m != 1) {
            mpf_class f(m, 128);
            mpf_class r = sqrt(f);
            root = r.get_d();
        }
        acc += t.get_d() * root;
    }
    return acc;
}

std::string SurdExpr::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto const& [m, t] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        if (m == 1)
            os << t.get_str();
        else
            os << t.get_str() << "*sqrt(" << m.get_str() << ")";
    }
    return os.str();
}

} // namespace lcx
