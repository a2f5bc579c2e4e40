#pragma once

/**
 * @file certificate.hpp
 * @brief Replayable record of a theorem check.
 *
 * A certificate lists every hypothesis that was tested, whether it held and,
 * when it did not, the first index (and a human-readable detail) that broke
 * it. `params` holds everything needed to re-run the check; replay() in
 * report.hpp does exactly that and compares the outcome.
 */

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace lcx {

enum class Verdict { certified, hypothesis_failed, inapplicable };

std::string_view verdict_name(Verdict v);

struct HypothesisCheck {
    std::string id;
    std::string statement;
    bool holds = true;
    std::optional<long> witness_index;
    std::string detail;
};

struct Certificate {
    std::string theorem;
    std::string target;
    Verdict verdict = Verdict::certified;
    std::string conclusion;
    long range_lo = 0;
    long range_hi = 0;
    std::vector<HypothesisCheck> hypotheses;
    /// Theorem-specific exact values (decimal strings for numbers).
    nlohmann::ordered_json data = nlohmann::ordered_json::object();
    /// Inputs of the check, enough to replay it.
    nlohmann::ordered_json params = nlohmann::ordered_json::object();

    bool certified() const { return verdict == Verdict::certified; }

    HypothesisCheck const* find(std::string_view id) const {
        for (auto const& h : hypotheses)
            if (h.id == id)
                return &h;
        return nullptr;
    }

    /// Adds a hypothesis; a failing one demotes a certified verdict.
    void add(HypothesisCheck h) {
        if (!h.holds && verdict == Verdict::certified)
            verdict = Verdict::hypothesis_failed;
        hypotheses.push_back(std::move(h));
    }
};

} // namespace lcx
