#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials over Int or Rat.
 *
 * Coefficient i multiplies x^i. The stored vector never has a trailing zero,
 * so the zero polynomial is the empty vector and degree() returns -1 for it.
 */

#include "lcx/exact.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace lcx {

template <typename T>
class basic_poly {
public:
    basic_poly() = default;
    basic_poly(std::initializer_list<T> c) : c_(c) { trim(); }
    explicit basic_poly(std::vector<T> c) : c_(std::move(c)) { trim(); }

    static basic_poly constant(T v) { return basic_poly(std::vector<T>{std::move(v)}); }
    /// c * x^k
    static basic_poly monomial(T c, std::size_t k) {
        std::vector<T> v(k + 1);
        v[k] = std::move(c);
        return basic_poly(std::move(v));
    }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::size_t size() const { return c_.size(); }
    std::vector<T> const& coeffs() const { return c_; }

    /// Zero outside the stored range.
    T coeff(long i) const {
        if (i < 0 || i >= static_cast<long>(c_.size()))
            return T(0);
        return c_[static_cast<std::size_t>(i)];
    }

    basic_poly& operator+=(basic_poly const& o) {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        trim();
        return *this;
    }

    basic_poly& operator-=(basic_poly const& o) {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    basic_poly& operator*=(T const& s) {
        for (auto& x : c_)
            x *= s;
        trim();
        return *this;
    }

    friend basic_poly operator+(basic_poly a, basic_poly const& b) { return a += b; }
    friend basic_poly operator-(basic_poly a, basic_poly const& b) { return a -= b; }
    friend basic_poly operator*(basic_poly a, T const& s) { return a *= s; }
    friend basic_poly operator*(T const& s, basic_poly a) { return a *= s; }
    friend basic_poly operator*(basic_poly const& a, basic_poly const& b) { return multiply(a, b); }
    basic_poly operator-() const { return *this * T(-1); }

    bool operator==(basic_poly const&) const = default;

    basic_poly derivative() const {
        std::vector<T> d;
        for (std::size_t i = 1; i < c_.size(); ++i)
            d.push_back(c_[i] * T(static_cast<long>(i)));
        return basic_poly(std::move(d));
    }

    /// Horner evaluation; U must accept T coefficients (Rat for T = Int).
    template <typename U>
    U eval(U const& x) const {
        U acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc *= x;
            acc += U(*it);
        }
        return acc;
    }

    /// f(shift + x) as a polynomial in x.
    basic_poly compose_affine(T const& shift) const {
        basic_poly lin{shift, T(1)};
        basic_poly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * lin + constant(*it);
        return acc;
    }

    /// Divides every coefficient by s; returns false (leaving *this untouched)
    /// when some quotient would not be exact in T.
    bool exact_divide(T const& s);

    std::string to_string(char var = 'q') const;

private:
    static basic_poly multiply(basic_poly const& a, basic_poly const& b);

    void trim() {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<T> c_;
};

using Poly = basic_poly<Int>;
using RatPoly = basic_poly<Rat>;

template <> Poly Poly::multiply(Poly const& a, Poly const& b);
template <> RatPoly RatPoly::multiply(RatPoly const& a, RatPoly const& b);
template <> bool Poly::exact_divide(Int const& s);
template <> bool RatPoly::exact_divide(Rat const& s);
extern template std::string basic_poly<Int>::to_string(char) const;
extern template std::string basic_poly<Rat>::to_string(char) const;

/// Schoolbook product, kept separate so tests can compare it against the
/// default Int multiplication (Kronecker substitution for large operands).
Poly multiply_schoolbook(Poly const& a, Poly const& b);

RatPoly to_rat_poly(Poly const& p);

struct NonnegReport {
    bool nonneg = true;
    std::optional<long> first_negative_power;
};

/// The <=_q order test: f has no negative coefficient.
NonnegReport coeffs_nonneg(Poly const& f);

// Named free-function forms of the poly operations.
inline Poly poly_mul(Poly const& f, Poly const& g) { return f * g; }
inline Poly poly_sub(Poly const& f, Poly const& g) { return f - g; }
inline Rat poly_eval(Poly const& f, Rat const& x) { return f.eval(x); }
inline Poly poly_derivative(Poly const& f) { return f.derivative(); }
inline Poly poly_compose_affine(Poly const& f, Int const& shift) { return f.compose_affine(shift); }

} // namespace lcx
