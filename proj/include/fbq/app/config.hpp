/// @file config.hpp
/// @brief Run configuration, presets and the key table shared by config
/// files and command-line flags.
///
/// A config file is flat `key = value` text (TOML subset: `#` comments,
/// quoted strings, `[a, b]` arrays, an optional `[run]` header). Keys are
/// the long flag names without dashes, e.g.
///
///     preset = "persistence"
///     grid = 256
///     rho-q = [2, 4, 8]
///
/// The same document in JSON form is what `fbq run --print-config` emits.
/// Precedence: preset defaults < config file < flags.
#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fbq/diagnostics/record.hpp"
#include "fbq/dynamics/state.hpp"
#include "fbq/spectral/random_field.hpp"

namespace fbq {

struct InitialCondition {
    /// shear | random | rough | file
    std::string kind = "random";
    std::uint64_t seed = 1;
    RandomFieldSpec field{2.0, 4, true, 1.0};
    /// Targets for ||omega0||_q and ||rho0||_q (random and rough kinds).
    double omega_norm = 1.0;
    double rho_norm = 1.0;
    std::filesystem::path rho_file;
    std::filesystem::path omega_file;
};

struct RunConfig {
    std::string preset = "random";
    int grid = 128;
    double alpha = 1.5;
    Formulation formulation = Formulation::Zeta;
    double T = 1.0;
    /// Fixed step; 0 selects the step from the CFL limit.
    double dt = 0.0;
    double cfl = 0.5;
    /// Upper bound on automatic steps.
    double max_dt = 0.01;
    /// Diagnostic samples per unit time.
    double samples = 20.0;
    InitialCondition initial;
    DiagnosticsConfig diagnostics;
    std::filesystem::path out = "fbq-out";
};

/// shear, random, persistence, underresolved, file.
const std::vector<std::string>& preset_names();
/// Throws ConfigError for an unknown name.
RunConfig preset_config(const std::string& name);

struct ConfigKey {
    std::string name;
    std::string help;
    std::function<void(RunConfig&, const std::vector<std::string>&)> set;
};

/// Every settable key, in documentation order ("preset" first).
const std::vector<ConfigKey>& config_keys();

/// Applies one key; throws ConfigError for unknown keys or bad values.
void apply_setting(RunConfig& cfg, const std::string& key, const std::vector<std::string>& values);

/// Hard errors throw ConfigError; values outside the persistence
/// ranges (s > 1, 2 < q < inf) come back as warnings.
std::vector<std::string> validate(const RunConfig& cfg);

nlohmann::ordered_json to_json(const RunConfig& cfg);

/// Initial state for the configured preset/initial condition at t = 0.
SolverState initial_state(const RunConfig& cfg);

}  // namespace fbq
