#pragma once

/**
 * @file error.hpp
 * @brief Error kinds raised across the library.
 *
 * Every failure is reported as an lcx::error carrying a machine-readable
 * kind; the CLI maps kinds onto exit codes.
 */

#include <stdexcept>
#include <string>
#include <string_view>

namespace lcx {

enum class errc {
    zero_leading_coefficient,
    unknown_sequence,
    unknown_triangle,
    unknown_identity,
    unknown_family,
    parse_error,
    validation_error,
    length_mismatch,
    offset_mismatch,
    too_short,
    zero_term,
    non_positive_coefficient,
    non_positive_mu,
    nonlinear_coefficients,
    non_constant_coefficients,
    inadmissible_recurrence,
    inapplicable,
    range_error,
};

std::string_view errc_name(errc e) noexcept;

class error : public std::runtime_error {
public:
    error(errc kind, std::string const& what)
        : std::runtime_error(what), kind_(kind) {}

    errc kind() const noexcept { return kind_; }

private:
    errc kind_;
};

} // namespace lcx
