#pragma once

/**
 * @file transforms.hpp
 * @brief Sequence operators: sums, convolutions and triangle transforms,
 *        plus the identity checker and the random test corpora.
 *
 * Outputs keep the offset of their inputs. Binary operators reject inputs
 * whose lengths (length_mismatch) or offsets/strides (offset_mismatch) differ.
 */

#include "lcx/sequences.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lcx {

Seq componentwise_sum(Seq const& x, Seq const& y);

/// z_n = sum_k binom(n,k) x_k y_{n-k}
Seq binomial_convolution(Seq const& x, Seq const& y);

/// z_n = sum_k x_k y_{n-k}
Seq ordinary_convolution(Seq const& x, Seq const& y);

/// z_n = sum_k a(n,k) x_k for the rows of t; x needs at least num_rows terms.
Seq triangle_transform(Triangle const& t, Seq const& x);

// triangle_transform with a catalogue triangle of x.size() rows.
Seq binomial_transform(Seq const& x);
Seq stirling2_transform(Seq const& x);
Seq stirling1_transform(Seq const& x);
Seq morgan_voyce_transform(Seq const& x);
Seq narayana_transform(Seq const& x);
Seq eulerian_transform(Seq const& x);

/// Named transform ("binomial", "stirling2", ..., matching triangle names).
Seq named_transform(std::string_view triangle, Seq const& x);

struct IdentityReport {
    std::string name;
    std::string statement;
    long n_min = 0;
    long n_max = 0;
    bool all_equal = true;
    std::optional<long> first_mismatch;
    std::string lhs_at_mismatch;
    std::string rhs_at_mismatch;
};

std::vector<std::string> const& identity_names();

/// Computes both sides independently for n_min <= n <= n_max and compares
/// them exactly; throws unknown_identity.
IdentityReport verify_identity(std::string_view name, long n_max);

/// `count` sequences of length `len` with nondecreasing ratios p_i / Q,
/// hence log-convex by construction. Deterministic for a given seed.
std::vector<Seq> log_convex_corpus(std::size_t count, std::size_t len, std::uint64_t seed);

/// Same construction with nonincreasing ratios (log-concave).
std::vector<Seq> log_concave_corpus(std::size_t count, std::size_t len, std::uint64_t seed);

/// Smallest pair (in enumeration order) of log-convex sequences with terms
/// in 1..max_term and length `len` whose ordinary convolution is not
/// log-convex.
std::optional<std::pair<Seq, Seq>> find_ordinary_convolution_counterexample(long max_term, std::size_t len);

} // namespace lcx
