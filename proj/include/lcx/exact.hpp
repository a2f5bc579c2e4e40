#pragma once

/**
 * @file exact.hpp
 * @brief Arbitrary-precision integers and rationals.
 *
 * Int and Rat are GMP's C++ classes. Every Rat produced through this header
 * is canonical: positive denominator, numerator and denominator coprime.
 */

#include <gmpxx.h>

#include <compare>
#include <string>

namespace lcx {

using Int = mpz_class;
using Rat = mpq_class;

/// Canonical num/den; throws lcx::error(range_error) on a zero denominator.
Rat make_rat(Int const& num, Int const& den);

/// Parses "p", "-p" or "p/q".
Rat parse_rat(std::string const& text);

std::strong_ordering rat_cmp(Rat const& a, Rat const& b);

inline int sign(Int const& x) { return sgn(x); }
inline int sign(Rat const& x) { return sgn(x); }

inline bool is_integer(Rat const& x) { return x.get_den() == 1; }

Int binomial(long n, long k);
Int factorial(unsigned long n);
Int pow_int(Int const& base, unsigned long e);

std::string to_string(Int const& x);
std::string to_string(Rat const& x);

} // namespace lcx
