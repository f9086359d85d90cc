/// @file boussinesq.hpp
/// @brief Right-hand sides of the fractional Boussinesq system in the
/// vorticity and the modified-vorticity (zeta) formulations.
///
///   vorticity:  omega_t = -Lambda^alpha omega - u.grad omega + d1 rho
///   zeta:       zeta_t  = -Lambda^alpha zeta  - u.grad zeta + [S, u.grad] rho - N rho
///   density:    rho_t   = -u.grad rho
///
/// with u recovered from omega (= zeta + S rho) by the Biot-Savart law. All
/// advection products are dealiased with the 2/3 rule.
#pragma once

#include "fbq/dynamics/state.hpp"
#include "fbq/multipliers/multiplier.hpp"

namespace fbq {

/// u = grad^perp psi with Delta psi = omega, i.e.
///   u1^ = i xi2 omega^ / |xi|^2,  u2^ = -i xi1 omega^ / |xi|^2,  u^(0) = 0.
/// Throws ConfigError if the mean of omega exceeds 1e-12 * max(1, rms).
VectorField biot_savart(const ScalarField& omega);

struct Tendency {
    ScalarField vort;
    ScalarField rho;
};

Tendency rhs_vorticity(const SolverState& state);
Tendency rhs_zeta(const SolverState& state);

/// Switches between omega and zeta = omega - S rho.
SolverState convert(const SolverState& state, Formulation to);

/// Precomputed lattice symbols for one grid and alpha, with array kernels
/// shared by the public RHS functions and the integrator.
class BoussinesqOperators {
public:
    BoussinesqOperators(const SpectralGrid& grid, double alpha);

    const SpectralGrid& grid() const noexcept { return grid_; }
    double alpha() const noexcept { return alpha_; }
    /// |xi|^alpha on every stored mode.
    const RealArray& dissipation() const noexcept { return dissipation_; }

    /// Tendencies without the -Lambda^alpha term. Optionally reports max |u|
    /// on the grid.
    void nonlinear(Formulation f, const ComplexArray& vort, const ComplexArray& rho,
                   ComplexArray& dvort, ComplexArray& drho, double* max_speed = nullptr) const;

    /// Spectral velocity of a spectral vorticity; the mean mode is ignored.
    void velocity(const ComplexArray& omega, ComplexArray& u1, ComplexArray& u2) const;

    void apply_s(ComplexArray& c) const { s_.apply(c); }
    void apply_n(ComplexArray& c) const { n_.apply(c); }

    /// omega^ from the evolved variable.
    ComplexArray omega_of(Formulation f, const ComplexArray& vort, const ComplexArray& rho) const;

private:
    // D(u . grad f) with physical velocity components.
    void advect(const RealArray& u1, const RealArray& u2, const ComplexArray& f,
                ComplexArray& out) const;

    SpectralGrid grid_;
    double alpha_;
    LatticeSymbol d1_, d2_, s_, n_;
    RealArray dissipation_;
    RealArray inv_laplacian_;  // -1/|xi|^2, 0 at the zero mode
    std::vector<unsigned char> keep_;
};

}  // namespace fbq
