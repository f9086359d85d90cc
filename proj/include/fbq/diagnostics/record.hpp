/// @file record.hpp
/// @brief Per-sample diagnostics of a solver state.
///
/// NDJSON key order (one object per line):
///   t, lqRho_<q> (one per configured q), lqZeta, lqOmega, lqSRho,
///   sobolevRhoSQ, sobolevZeta, lqU, lipU, dissRate, dissIntegral,
///   tailEnergy
#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fbq/dynamics/state.hpp"

namespace fbq {

struct DiagnosticsConfig {
    /// Exponents for the density L^q series.
    std::vector<double> rho_q = {2.0, 4.0, 8.0};
    /// Exponent q and smoothness s of the tracked W^{s,q} quantities.
    double q = 4.0;
    double s = 1.5;
    /// Resolution threshold on tailEnergy.
    double tail_threshold = 1e-6;
    /// Largest admissible envelope growth rate B.
    double growth_ceiling = 10.0;
    /// Allowed relative drift of ||rho||_q.
    double drift_tolerance = 1e-6;
    /// Floor applied before taking logarithms in envelope fits.
    double floor = 1e-14;
};

struct DiagnosticsRecord {
    double t = 0.0;
    std::vector<std::pair<double, double>> lq_rho;  // (q, ||rho||_q)
    double lq_zeta = 0.0;
    double lq_omega = 0.0;
    double lq_s_rho = 0.0;      // ||S rho||_q
    double sobolev_rho = 0.0;   // ||(I-Delta)^(s/2) rho||_q
    double sobolev_zeta = 0.0;  // ||(I-Delta)^((s-1)/2) zeta||_q
    double lq_u = 0.0;
    double lip_u = 0.0;         // grid max over the entries of grad u
    double diss_rate = 0.0;     // ||Lambda^(alpha/2) |zeta|^(q/2)||_2^2
    double diss_integral = 0.0; // trapezoid running integral of diss_rate
    double tail_energy = 0.0;   // outer-third spectral energy fraction, max over rho and omega
};

/// Samples a state. With a previous record the dissipation integral is
/// advanced by the trapezoid rule; without one it starts at 0. Throws
/// NumericalError naming the first non-finite quantity.
DiagnosticsRecord sample(const SolverState& state, const DiagnosticsConfig& cfg,
                         const DiagnosticsRecord* previous = nullptr);

/// Fraction of the spectral energy (zero mode excluded) in modes with
/// max(|k1|, |k2|) > 2n/9, the outer third of the dealiased band.
double tail_energy_fraction(const SpectralGrid& grid, const ComplexArray& coeffs);

std::string rho_key(double q);
std::vector<std::string> record_keys(const DiagnosticsConfig& cfg);

nlohmann::ordered_json to_json(const DiagnosticsRecord& r);

/// Named time series (t, value) extracted from a record stream.
std::vector<std::pair<double, double>> series(const std::vector<DiagnosticsRecord>& records,
                                              const std::string& key);

}  // namespace fbq
