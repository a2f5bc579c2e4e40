#pragma once

/**
 * @file qpolys.hpp
 * @brief Polynomial sequences in q: generation, q-log-convexity checks,
 *        the triangle recurrence criterion and the curvature conditions
 *        (C1)/(C2) for triangle transforms.
 */

#include "lcx/certificate.hpp"
#include "lcx/convexity.hpp"
#include "lcx/poly.hpp"
#include "lcx/sequences.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lcx {

struct PolySeq {
    std::vector<Poly> polys;
    std::string name;

    std::size_t size() const { return polys.size(); }
    Poly const& operator[](std::size_t n) const { return polys[n]; }
};

/// First failure of a coefficientwise comparison P_{n-1} P_{n+1} vs P_n^2.
struct QCheckReport {
    CheckStatus status = CheckStatus::holds;
    std::optional<long> n;
    std::optional<long> power;
    Int coefficient;  // the negative coefficient found
    long range_lo = 1;
    long range_hi = 0;

    bool holds() const { return status != CheckStatus::fails; }
};

/// P_{n-1} P_{n+1} - P_n^2 >=_q 0 for 1 <= n <= len-2; throws too_short.
QCheckReport q_log_convex_check(PolySeq const& ps);
/// P_n^2 - P_{n-1} P_{n+1} >=_q 0.
QCheckReport q_log_concave_check(PolySeq const& ps);

/// P_{n-1} P_{n+1} - P_n^2.
Poly q_convexity_difference(PolySeq const& ps, std::size_t n);

std::vector<std::string> const& poly_family_names();

/**
 * P_0..P_{n_max} of a family: bell, eulerian, morgan_voyce, narayana,
 * q_schroder, q_delannoy, q_factorial. Each family is produced by its own
 * recurrence and checked against an independent route (triangle rows,
 * closed forms, evaluations at q = 1, 2); a disagreement throws
 * std::logic_error. Throws unknown_family.
 */
PolySeq gen_poly_seq(std::string_view name, long n_max);

/// Row polynomials of a triangle.
PolySeq row_polys(Triangle const& t);

/// Coefficients of T(n,k) = (a1 n + a2 k + a3) T(n-1,k) + (b1 n + b2 k + b3) T(n-1,k-1).
struct TriangleRec {
    Rat a1, a2, a3, b1, b2, b3;

    /// a1, a1+a2, a1+a3, b1, b1+b2, b1+b2+b3 all >= 0.
    bool admissible() const;
    /// Rows 0..n_max from T(0,0) = 1; throws range_error on non-integral entries.
    Triangle generate(long n_max) const;
};

/// (a2 b1 - a1 b2, a2 (b1+b2) - a1 b2, a2 (b1+b2+b3) - (a1+a3) b2)
std::array<Rat, 3> thm_T_quantities(TriangleRec const& tr);

/// Certificate for q-log-convexity of the row polynomials. The three
/// quantities decide the criterion for all n; the generated rows up to
/// n_max are additionally checked directly. Throws inadmissible_recurrence.
Certificate check_thm_T_qlcx(TriangleRec const& tr, long n_max);

struct CurvatureTable {
    long n = 0;
    long t = 0;
    std::vector<Int> values;  // a_k(n,t), k = 0..floor(t/2)
    /// Last k with a nonnegative value in the leading nonnegative run, or
    /// empty when a_0 < 0.
    std::optional<long> r;

    Int total() const;
};

/// Throws range_error unless 1 <= n, 0 <= t <= 2n and rows through n+1 exist.
CurvatureTable curvature_table(Triangle const& t, long n, long t_index);

enum class C2Status { holds, weak, fails };

std::string_view c2_status_name(C2Status s);

struct C2Scan {
    C2Status status = C2Status::holds;
    /// First (n,t,k) breaking the pattern (fails) or first zero after a
    /// negative value (weak).
    std::optional<std::array<long, 3>> witness;
};

/// Classifies one table: nonnegative prefix then strictly negative suffix
/// (holds); same with zeros inside the suffix (weak); otherwise fails.
C2Scan classify_c2(CurvatureTable const& ct);

/// (C1) via q_log_convex_check on rows 0..n_max+1 and (C2) for every
/// 1 <= n <= n_max, 0 <= t <= 2n. Needs rows through n_max + 1.
Certificate check_C1_C2(Triangle const& t, long n_max);

/// The polynomial factor of the Morgan-Voyce curvature values,
/// sharing the sign of a_k(n,t).
Int morgan_voyce_tilde(long n, long t, long k);

/// Nonincreasing in k for every (n,t) with 1 <= n <= n_max (finite
/// differences), and sign(a_k) == sign(tilde a_k) wherever the factorial
/// prefactor is defined. Returns the first offending (n,t,k) if any.
std::optional<std::array<long, 3>> check_morgan_voyce_tilde(long n_max);

struct ProbeReport {
    std::string triangle;
    std::size_t corpus_size = 0;
    std::size_t len = 0;
    std::size_t failures = 0;
    std::optional<Seq> first_counterexample_input;
    std::optional<CheckReport> first_counterexample_check;
};

/// Applies the triangle transform (with optional weights b(n,k) = a(n,k) u_k)
/// to a log-convex corpus and reports outputs that are not log-convex.
ProbeReport transform_preserves_lcx_probe(std::string_view triangle, std::size_t corpus_size, std::size_t len,
                                          std::uint64_t seed = 1, std::optional<Seq> weights = std::nullopt);

} // namespace lcx
