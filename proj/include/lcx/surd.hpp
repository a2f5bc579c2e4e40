#pragma once

/**
 * @file surd.hpp
 * @brief Quadratic surds p + q*sqrt(d) and sums of rational multiples of
 *        square roots, with exact sign determination.
 *
 * QuadSurd is the value type for roots of a*x^2 - b*x - c with rational
 * coefficients. Products of two QuadSurds with different radicands leave
 * Q(sqrt d) and land in SurdExpr, a finite sum  sum_i t_i * sqrt(m_i).
 *
 * Sign determination in SurdExpr::sign():
 *   1. rewrite the radicands over a pairwise-coprime base b_1..b_k, so the
 *      expression becomes multilinear in sqrt(b_1)..sqrt(b_k) with rational
 *      coefficients;
 *   2. the expression is zero iff every multilinear coefficient is zero
 *      (square roots of pairwise-coprime non-squares are linearly
 *      independent over Q together with all their products);
 *   3. otherwise bracket each sqrt(b_i) between consecutive dyadic rationals
 *      and refine the precision until the bracketed sum excludes zero.
 * Step 3 terminates because step 2 already ruled out zero.
 */

#include "lcx/exact.hpp"

#include <compare>
#include <map>
#include <string>

namespace lcx {

/// m = s^2 * d. `certified` is false only when trial division could not
/// finish on a very large radicand; d may then carry a square factor, which
/// the SurdExpr sign procedure tolerates.
struct SquareSplit {
    Int square_root;
    Int remainder;
    bool certified = true;
};

SquareSplit split_square(Int const& m);

class SurdExpr;

class QuadSurd {
public:
    QuadSurd() = default;
    QuadSurd(Rat value) : p_(std::move(value)) {}  // NOLINT: implicit by intent

    /// p + q*sqrt(radicand) for rational radicand >= 0; throws range_error
    /// on a negative radicand. Folds to a pure rational when possible.
    static QuadSurd make(Rat const& p, Rat const& q, Rat const& radicand);

    Rat const& rational_part() const { return p_; }
    Rat const& surd_coefficient() const { return q_; }
    /// 1 for a pure rational, otherwise the reduced radicand (> 1).
    Int const& radicand() const { return d_; }
    bool is_rational() const { return d_ == 1; }
    bool squarefree_certified() const { return certified_; }

    SurdExpr expr() const;
    int sign() const;
    double approx() const;
    std::string to_string() const;

    bool operator==(QuadSurd const& other) const;

private:
    Rat p_;
    Rat q_;
    Int d_ = 1;
    bool certified_ = true;
};

std::strong_ordering compare(QuadSurd const& a, QuadSurd const& b);
std::strong_ordering compare(QuadSurd const& a, Rat const& b);

class SurdExpr {
public:
    SurdExpr() = default;
    SurdExpr(Rat const& r);                          // NOLINT
    SurdExpr(QuadSurd const& s) : SurdExpr(s.expr()) {}  // NOLINT

    /// t * sqrt(m), m >= 1.
    static SurdExpr term(Rat const& t, Int const& m);

    SurdExpr& operator+=(SurdExpr const& o);
    SurdExpr& operator-=(SurdExpr const& o);
    SurdExpr& operator*=(Rat const& r);

    friend SurdExpr operator+(SurdExpr a, SurdExpr const& b) { return a += b; }
    friend SurdExpr operator-(SurdExpr a, SurdExpr const& b) { return a -= b; }
    friend SurdExpr operator*(SurdExpr a, Rat const& r) { return a *= r; }
    friend SurdExpr operator*(Rat const& r, SurdExpr a) { return a *= r; }
    friend SurdExpr operator*(SurdExpr const& a, SurdExpr const& b);
    SurdExpr operator-() const { return *this * Rat(-1); }

    /// Exact: true iff the represented real number is 0.
    bool is_zero() const;
    int sign() const;
    double approx() const;

    /// Radicand -> coefficient, radicand 1 holding the rational part.
    std::map<Int, Rat> const& terms() const { return terms_; }
    std::string to_string() const;

private:
    void add_term(Int const& m, Rat const& t);

    std::map<Int, Rat> terms_;
};

} // namespace lcx
