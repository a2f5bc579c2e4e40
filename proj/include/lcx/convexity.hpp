#pragma once

/**
 * @file convexity.hpp
 * @brief Exact log-convexity / log-concavity predicates on sequences and
 *        2x2 minor checks on triangles.
 *
 * All checks use the product form z_{k-1} z_{k+1} vs z_k^2, so zero terms
 * are handled literally. Inequalities are non-strict unless `strict` is set.
 */

#include "lcx/exact.hpp"
#include "lcx/sequences.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lcx {

enum class CheckStatus { holds, fails, holds_from_index };

std::string_view status_name(CheckStatus s);

/// A failed inequality `lhs <relation> rhs`. `indices` are in the original
/// numbering of the sequence (e.g. k-1, k, k+1 for log-convexity).
struct Violation {
    std::vector<long> indices;
    Int lhs;
    Int rhs;
    std::string relation;
};

struct CheckReport {
    CheckStatus status = CheckStatus::holds;
    std::optional<Violation> first_violation;
    long range_lo = 0;
    long range_hi = 0;
    /// Set when status == holds_from_index.
    std::optional<long> from_index;

    bool holds() const { return status != CheckStatus::fails; }
};

/// z_{k-1} z_{k+1} >= z_k^2 for every interior k; throws too_short below 3 terms.
CheckReport is_log_convex(Seq const& z, bool strict = false);
CheckReport is_log_concave(Seq const& z, bool strict = false);

/// Terms of z from original index `from` on.
Seq tail_from(Seq const& z, long from);

enum class Monotone { increasing, decreasing, both, neither };

struct RatioReport {
    std::vector<Rat> ratios;  // x_i = z_{i+1} / z_i
    bool increasing = true;   // non-strict
    bool decreasing = true;

    Monotone verdict() const;
};

/// Throws zero_term when some term is not positive.
RatioReport ratio_sequence(Seq const& z);

struct SR2Report {
    CheckReport convex_side;   // a_m a_n <= a_{m-k} a_{n+k}
    CheckReport concave_side;  // a_m a_n >= a_{m-k} a_{n+k}
    /// (1,1) when the convex side holds, (1,-1) when only the concave side
    /// holds, empty otherwise.
    std::optional<std::pair<int, int>> sign_pair;
};

/// Brute force over 1 <= k <= m <= n inside the first `window` terms.
SR2Report sr2_window_check(Seq const& z, long window);

/// All 2x2 minors of rows 0..rows (columns 0..rows) are >= 0.
CheckReport is_tp2_triangle(Triangle const& t, long rows);

enum class Parity { even, odd };

/// Terms whose original index has the given parity.
Seq bisection(Seq const& z, Parity parity);

struct TailReport {
    long start_index = 0;          // smallest N with z_N, z_{N+1}, ... log-convex
    long checked_to = 0;           // last original index inside the prefix
    bool prefix_relative = true;   // always: later terms are not examined
};

TailReport find_logconvex_tail(Seq const& z);

} // namespace lcx
