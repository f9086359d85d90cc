/// @file commands.hpp
/// @brief Run orchestration and the `run`, `check` and `norms` commands.
///
/// Exit codes: 0 success/PASS, 1 check or verdict FAIL, 2 config error,
/// 3 numerical or I/O failure. Failures print {"error": kind, "message": ...}
/// on stdout.
#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "fbq/analysis/suites.hpp"
#include "fbq/app/config.hpp"
#include "fbq/diagnostics/verdict.hpp"

namespace fbq {

enum ExitCode : int { kExitOk = 0, kExitFail = 1, kExitConfig = 2, kExitNumerical = 3 };

struct RunResult {
    std::vector<DiagnosticsRecord> records;
    VerdictReport verdict;
    SolverState final_state;
    long steps = 0;
};

/// Sample times k / cfg.samples for k = 0, 1, ... up to T, plus T itself.
std::vector<double> sample_times(double T, double samples_per_unit);

/// Integrates from `initial` to cfg.T, sampling diagnostics on the cadence
/// and streaming each record as one NDJSON line to `ndjson` when given.
/// With cfg.dt > 0 each sampling interval is split into equal steps no
/// longer than dt; otherwise every step is min(max_dt, 0.9 * CFL limit).
RunResult run_simulation(const RunConfig& cfg, SolverState initial, std::ostream* ndjson = nullptr);
RunResult run_simulation(const RunConfig& cfg, std::ostream* ndjson = nullptr);

/// Writes diagnostics.ndjson, verdict.json, config.json, rho.snap and
/// omega.snap under cfg.out and prints the verdict JSON.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int check_command(const std::string& suite, const SuiteOptions& opts, std::ostream& out);
int norms_command(const std::filesystem::path& snapshot, double s, double q, std::ostream& out);

/// Full command-line entry point.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fbq
