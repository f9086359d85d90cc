/// @file integrator.hpp
/// @brief Integrating-factor RK4 time stepping.
///
/// The dissipation Lambda^alpha is integrated exactly through the factor
/// exp(-|xi|^alpha dt); the advective and source terms go through classical
/// RK4 stages in the transformed variable. The density carries no
/// dissipation and advances with plain RK4.
#pragma once

#include "fbq/dynamics/boussinesq.hpp"

namespace fbq {

class Integrator {
public:
    Integrator(const SpectralGrid& grid, double alpha);

    /// Throws NumericalError (with the measured max |u|) when
    /// dt > cfl_safety * h / max|u|, and ConfigError for a state on another
    /// grid or alpha.
    SolverState step(const SolverState& state, const StepperConfig& cfg) const;

    /// Grid maximum of |u| for the state's velocity.
    double max_speed(const SolverState& state) const;

    /// Largest dt allowed by the CFL condition (infinite for u = 0).
    double cfl_limit(const SolverState& state, double cfl_safety) const;

    const BoussinesqOperators& operators() const noexcept { return ops_; }

private:
    BoussinesqOperators ops_;
};

/// Single step with freshly built operators; see Integrator::step.
SolverState step(const SolverState& state, const StepperConfig& cfg);

}  // namespace fbq
