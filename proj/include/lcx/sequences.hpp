#pragma once

/**
 * @file sequences.hpp
 * @brief Exact generation of the combinatorial sequences and triangles.
 *
 * Three-term recurrences are stored in the normalized shape
 *
 *     a_n z_{n+1} = b_n z_n (+|-) c_n z_{n-1},   n >= start,
 *
 * with a_n, b_n, c_n polynomials in n over Q. Recurrences that are usually
 * written with z_n on the left (Delannoy, polyhexes, cubic walks, Fine) are
 * catalogued after the shift n -> n+1.
 */

#include "lcx/exact.hpp"
#include "lcx/poly.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lcx {

/// Finite prefix of an integer sequence. Stored position i is the term of
/// index offset + stride * i in the original numbering.
struct Seq {
    std::vector<Int> values;
    long offset = 0;
    long stride = 1;
    std::string name;

    std::size_t size() const { return values.size(); }
    long index_of(std::size_t pos) const { return offset + stride * static_cast<long>(pos); }
    Int const& operator[](std::size_t pos) const { return values[pos]; }
};

/// Lower-triangular array; row n holds a(n, 0..n).
struct Triangle {
    std::vector<std::vector<Int>> rows;
    std::string name;

    std::size_t num_rows() const { return rows.size(); }
    /// a(n, k), zero outside 0 <= k <= n (and beyond the stored rows).
    Int at(long n, long k) const;
    /// Row generating polynomial sum_k a(n,k) q^k.
    Poly row_poly(long n) const;
};

enum class RecSign { plus, minus };

struct Recurrence3 {
    RatPoly alpha;  // a_n
    RatPoly beta;   // b_n
    RatPoly gamma;  // c_n
    RecSign sign = RecSign::plus;
    std::vector<Rat> initial;  // z_0 .. z_start
    long start = 1;
    long offset = 0;
    std::string name;

    Rat a(long n) const { return alpha.eval(Rat(n)); }
    Rat b(long n) const { return beta.eval(Rat(n)); }
    Rat c(long n) const { return gamma.eval(Rat(n)); }
};

/// Terms of a recurrence; `integral` is false once some division was inexact.
struct RecurrenceTerms {
    std::vector<Rat> values;
    bool integral = true;

    /// Throws range_error when the terms are not all integers.
    Seq to_seq(std::string name = {}, long offset = 0) const;
};

RecurrenceTerms gen_from_recurrence3(Recurrence3 const& rec, long n_max);

/// Lucas and Pell initial values: `catalogue` uses L_0=1, L_1=3 and P_0=1, P_1=2;
/// `classical` uses L_0=2, L_1=1 and P_0=0, P_1=1.
enum class Convention { catalogue, classical };

std::vector<std::string> const& catalogue_names();
bool is_catalogue_name(std::string_view name);

/// Prefix z_0..z_{n_max} of a named sequence; throws unknown_sequence.
Seq gen_named(std::string_view name, long n_max, Convention conv = Convention::catalogue);

/// The catalogue entries that satisfy a three-term recurrence.
bool has_catalogue_recurrence(std::string_view name);
Recurrence3 catalogue_recurrence(std::string_view name, Convention conv = Convention::catalogue);

std::vector<std::string> const& triangle_names();
/// Rows 0..n_max; throws unknown_triangle.
Triangle gen_triangle(std::string_view name, long n_max);

// Independent routes kept for cross-checks.
Triangle stirling1_by_summation(long n_max);
Seq bell_by_binomial_recurrence(long n_max);
Seq euler_by_convolution(long n_max);

struct NamedRequest {
    std::string name;
    Convention convention = Convention::catalogue;
    long offset = 0;
};

using SeqSpec = std::variant<Recurrence3, NamedRequest>;

/**
 * Parses a sequence spec document (JSON syntax):
 *
 *   {"kind":"named", "name":"motzkin"}
 *   {"kind":"recurrence3", "sign":"plus"|"minus",
 *    "alpha":[c0,c1,...], "beta":[...], "gamma":[...],
 *    "initial":[z0,z1], "start":1, "offset":0, "check_to":1000}
 *
 * Coefficients may be integers or rational strings such as "3/2". Throws
 * parse_error (with line and field) on malformed input and
 * validation_error when a_n > 0, b_n > 0, c_n >= 0 fails for some
 * start <= n <= check_to.
 */
SeqSpec parse_seq_spec(std::string_view text, bool validate = true);

/// The spec-file form of a recurrence (kind "recurrence3"); integral
/// coefficients are written as numbers, others as "p/q" strings.
std::string recurrence_to_json(Recurrence3 const& rec);

/// Reads a spec file or, when `arg` names a catalogue sequence, returns the
/// corresponding request.
SeqSpec load_seq_spec(std::string const& arg);

/// Recurrence behind a spec: a recurrence3 spec as is, or the catalogue
/// recurrence of a named request (throws inapplicable if there is none).
Recurrence3 spec_recurrence(SeqSpec const& spec);

/// Terms z_0..z_{n_max} of a spec.
Seq spec_terms(SeqSpec const& spec, long n_max);

} // namespace lcx
