/// @file verdict.hpp
/// @brief PASS/FAIL verdict over a completed diagnostics stream.
///
/// Clauses:
///   envelope     every tracked norm has a finite fit with B <= growth_ceiling
///   conservation relative drift of each ||rho||_q within drift_tolerance
///   resolution   tailEnergy < tail_threshold at every sample
///   dissipation  dissIntegral finite
#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fbq/diagnostics/envelope.hpp"
#include "fbq/diagnostics/record.hpp"

namespace fbq {

struct VerdictReport {
    bool passed = true;
    /// Violated clause names, in the order listed above.
    std::vector<std::string> violated;
    /// Fits for the tracked norms followed by the dissipation integral.
    std::vector<EnvelopeFit> fits;
    std::vector<std::pair<double, double>> drift;  // (q, max relative drift)
    double max_tail_energy = 0.0;
    double final_diss_integral = 0.0;
};

/// Norm keys whose envelopes enter the envelope clause.
std::vector<std::string> tracked_norms(const DiagnosticsConfig& cfg);

/// An empty record list is a ConfigError.
VerdictReport persistence_verdict(const std::vector<DiagnosticsRecord>& records,
                                  const DiagnosticsConfig& cfg);

nlohmann::ordered_json to_json(const EnvelopeFit& fit);
/// {"verdict": "PASS"|"FAIL", "violated": [...], "maxTailEnergy", "dissIntegral",
///  "drift": {...}, "envelopes": [...]}
nlohmann::ordered_json to_json(const VerdictReport& report);

}  // namespace fbq
