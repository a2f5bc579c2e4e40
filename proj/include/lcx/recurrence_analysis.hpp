#pragma once

/**
 * @file recurrence_analysis.hpp
 * @brief Sufficient criteria for log-convexity / log-concavity of sequences
 *        given by three-term recurrences, checked exactly index by index.
 *
 * Plus form:   a_n z_{n+1} = b_n z_n + c_n z_{n-1}
 *   lambda_n is the positive root of a_n x^2 - b_n x - c_n; the checks are
 *   interlacing, crit_plus (and its log-concave dual lc_plus) and c_plus
 *   with a user-supplied rational mu_n.
 * Minus form:  a_n z_{n+1} = b_n z_n - c_n z_{n-1}, linear coefficients
 *   decided by the determinants A, B, C (c_minus / c_minus_lc).
 * Constant plus form: bisection analysis via the squared recurrence.
 *
 * All checks cover n up to a caller-chosen bound and report it; they never
 * claim more than the checked range.
 */

#include "lcx/certificate.hpp"
#include "lcx/sequences.hpp"
#include "lcx/surd.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lcx {

/// lambda_n = (b_n + sqrt(b_n^2 + 4 a_n c_n)) / (2 a_n). Requires a_n > 0,
/// b_n > 0, c_n >= 0 (c_n = 0 gives b_n / a_n); throws non_positive_coefficient.
QuadSurd lambda_n(Recurrence3 const& rec, long n);

/// a_n lambda^2 - b_n lambda - c_n, evaluated exactly (zero for lambda_n).
SurdExpr lambda_residual(Recurrence3 const& rec, long n, QuadSurd const& lambda);

/// x_{n-1} <= lambda_n <= x_n for start <= n <= n_max.
Certificate check_interlacing(Recurrence3 const& rec, long n_max);

/// a_n lambda_{n-1} lambda_{n+1} - b_n lambda_{n-1} - c_n (the left side of
/// the crit_plus inequality) as an exact surd expression.
SurdExpr crit_plus_residual(Recurrence3 const& rec, long n);

/// z_0..z_3 log-convex and crit_plus_residual(n) >= 0 for 2 <= n <= n_max.
Certificate check_thm_crit_plus(Recurrence3 const& rec, long n_max);

/// Dual: z_0..z_3 log-concave and crit_plus_residual(n) <= 0.
Certificate check_thm_lc_plus(Recurrence3 const& rec, long n_max);

/// p(n) / q(n) with rational polynomial numerator and denominator.
struct RatFunc {
    RatPoly num;
    RatPoly den{Rat(1)};
    std::string text;

    /// Throws range_error when the denominator vanishes at n.
    Rat operator()(long n) const;
};

/// Parses forms such as "(2n+5)/2", "6n/(2n+1)", "n+10", "(n^2+1)/(3n)".
RatFunc parse_ratfunc(std::string const& text);

/// a_n mu_{n-1} mu_{n+1} - b_n mu_{n-1} - c_n.
Rat c_plus_residual(Recurrence3 const& rec, RatFunc const& mu, long n);

/// Conditions (i) mu_n <= lambda_n for 1 <= n <= n_max+1,
/// (ii) z_1 <= mu_1 z_0 and z_2 <= mu_2 z_1, (iii) c_plus_residual >= 0
/// for 2 <= n <= n_max. Throws non_positive_mu.
Certificate check_thm_c_plus(Recurrence3 const& rec, RatFunc const& mu, long n_max);

/// Dyadic lower bounds floor(lambda_n 2^bits) / 2^bits, n_lo <= n <= n_hi.
/// Candidates only: they still have to pass check_thm_c_plus.
std::vector<Rat> suggest_mu_lower_bounds(Recurrence3 const& rec, long n_lo, long n_hi, unsigned bits);

struct ABCTriple {
    Rat A, B, C;
};

/// Determinants of the linear coefficient pairs; verifies
/// a_n A + b_n B + c_n C = 0 coefficientwise. Throws nonlinear_coefficients.
ABCTriple compute_ABC(Recurrence3 const& rec);

enum class ConvexityMode { convex, concave };

/// Minus-form criterion anchored at index `anchor`: coefficients positive
/// (c_n = 0 tolerated) on [max(anchor,1), n_max], seed z_anchor..z_anchor+2
/// log-convex (log-concave for the dual), and one of the conditions
/// (i)/(ii)/(iii) with z_anchor B + z_{anchor+1} C. When no condition
/// applies the certificate's verdict is hypothesis_failed and the data
/// lists all three condition evaluations.
Certificate check_thm_c_minus(Recurrence3 const& rec, long n_max, long anchor = 0,
                              ConvexityMode mode = ConvexityMode::convex);

/// Constant-coefficient plus form: squared recurrence
/// a^2 z_{n+2} = (b^2 + 2ac) z_n - c^2 z_{n-2}, the two seed identities,
/// and the resulting verdict for each bisection. Throws
/// non_constant_coefficients.
Certificate bisection_analysis(Recurrence3 const& rec, long n_max);

} // namespace lcx
