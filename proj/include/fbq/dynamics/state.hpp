/// @file state.hpp
/// @brief Solver state for the fractional Boussinesq system.
#pragma once

#include <string_view>

#include "fbq/spectral/field.hpp"

namespace fbq {

/// VORTICITY evolves omega; ZETA evolves zeta = omega - S rho.
enum class Formulation { Vorticity, Zeta };

std::string_view to_string(Formulation f);
/// Accepts "vorticity"/"omega" and "zeta" (case-insensitive).
Formulation parse_formulation(std::string_view s);

struct SolverState {
    /// Validates: common grid, alpha in (1, 2), and a mean-free vorticity
    /// (|mean| <= 1e-12 * max(1, rms)) in the VORTICITY formulation.
    SolverState(ScalarField rho, ScalarField vort, Formulation formulation, double t, double alpha);

    const SpectralGrid& grid() const noexcept { return rho.grid(); }

    ScalarField rho;
    ScalarField vort;  // omega or zeta, per formulation
    Formulation formulation;
    double t;
    double alpha;
};

enum class Scheme { IFRK4 };

struct StepperConfig {
    double dt = 1e-3;
    Scheme scheme = Scheme::IFRK4;
    double cfl_safety = 0.5;
};

}  // namespace fbq
