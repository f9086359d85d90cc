/// @file suites.hpp
/// @brief Seeded multi-trial verification suites and their reports.
///
/// Sign convention: worst_margin >= -tolerance means the suite passed.
///   identity  margin = 1e-10 - residual               (exact identity)
///   cordoba   margin = (lhs - rhs) / |lhs|            (tolerance 1e-10)
///   gn/kp/ikp margin = 0.15 - (max_fine / max_coarse - 1)
///   nsmooth   margin = 0.10 - |max_fine / max_coarse - 1|
///   hm        margin = 0 if every sup is finite, -inf otherwise
/// Non-finite ratios force the margin to -inf.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fbq/spectral/random_field.hpp"

namespace fbq {

struct InequalityReport {
    std::string name;
    int trials = 0;
    double worst_margin = 0.0;
    std::uint64_t worst_seed = 0;
    double tolerance = 0.0;
    bool passed = false;
    nlohmann::ordered_json details = nlohmann::ordered_json::object();
};

nlohmann::ordered_json to_json(const InequalityReport& r);

struct SuiteOptions {
    int trials = 64;
    std::uint64_t seed = 7;
    int grid = 128;
    /// Refinement grid for ratio-stability suites; 0 means 2 * grid.
    int fine_grid = 0;
    double alpha = 1.5;
    /// Suite-specific default when empty (identity 1.5, kp 0.5, cordoba sweeps).
    std::optional<double> s;
    double q = 4.0;
    /// Cordoba exponent; empty sweeps {2, 4, 6}.
    std::optional<double> p;
    /// Cordoba: shift each trial field to be pointwise nonnegative.
    bool nonnegative = false;
    RandomFieldSpec field{};
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"identity", "cordoba", "gn", "kp",
                                                   "ikp",      "nsmooth", "hm"};
    return names;
}

/// Throws ConfigError for an unknown suite name.
InequalityReport run_suite(const std::string& name, const SuiteOptions& opts);

InequalityReport run_identity_suite(const SuiteOptions& opts);
InequalityReport run_cordoba_suite(const SuiteOptions& opts);
InequalityReport run_gn_suite(const SuiteOptions& opts);
InequalityReport run_kp_suite(const SuiteOptions& opts);
InequalityReport run_ikp_suite(const SuiteOptions& opts);
InequalityReport run_nsmooth_suite(const SuiteOptions& opts);
InequalityReport run_hm_suite(const SuiteOptions& opts);

/// Independent per-trial seed for one of several fields drawn in a trial.
std::uint64_t stream_seed(std::uint64_t trial_seed, unsigned stream);

}  // namespace fbq
