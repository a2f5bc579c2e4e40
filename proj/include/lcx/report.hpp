#pragma once

/**
 * @file report.hpp
 * @brief JSON serialization of certificates and check reports, and replay
 *        of certificates from their recorded parameters.
 *
 * Report layout:
 *   {command, target, range: [lo, hi], status, witness?, certificate?,
 *    bound_checked}
 * Exact numbers are written as decimal strings.
 */

#include "lcx/certificate.hpp"
#include "lcx/convexity.hpp"
#include "lcx/qpolys.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace lcx {

using ojson = nlohmann::ordered_json;

ojson certificate_to_json(Certificate const& cert);

/// Inverse of certificate_to_json; throws parse_error on missing fields.
Certificate certificate_from_json(ojson const& j);

/// Re-runs the theorem check described by `params` (as stored in
/// Certificate::params). Throws parse_error for unknown theorems.
Certificate replay(ojson const& params);

/// True when replaying `cert` reproduces its verdict and, hypothesis by
/// hypothesis, the same outcome and witness index.
bool replay_matches(Certificate const& cert);

ojson violation_to_json(Violation const& v);

/// Assembles the top-level report object.
ojson make_report(std::string const& command, std::string const& target, long range_lo, long range_hi,
                  std::string const& status, std::optional<ojson> witness, std::optional<ojson> certificate,
                  long bound_checked);

} // namespace lcx
