#include "fbq/dynamics/integrator.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "fbq/errors.hpp"
#include "fbq/spectral/fft.hpp"

namespace fbq {

Integrator::Integrator(const SpectralGrid& grid, double alpha) : ops_(grid, alpha) {}

double Integrator::max_speed(const SolverState& st) const {
    ComplexArray omega =
        ops_.omega_of(st.formulation, st.vort.spectral_values(), st.rho.spectral_values());
    omega[0] = 0.0;
    ComplexArray u1h, u2h;
    ops_.velocity(omega, u1h, u2h);
    RealArray u1(st.grid().physical_size()), u2(st.grid().physical_size());
    inverse_fft(st.grid(), u1h, u1);
    inverse_fft(st.grid(), u2h, u2);
    double m = 0.0;
    for (std::size_t i = 0; i < u1.size(); ++i) m = std::max(m, std::hypot(u1[i], u2[i]));
    return m;
}

double Integrator::cfl_limit(const SolverState& st, double cfl_safety) const {
    const double umax = max_speed(st);
    if (umax == 0.0) return std::numeric_limits<double>::infinity();
    return cfl_safety * st.grid().spacing() / umax;
}

SolverState Integrator::step(const SolverState& st, const StepperConfig& cfg) const {
    if (!(st.grid() == ops_.grid()) || st.alpha != ops_.alpha()) {
        throw ConfigError("state does not match the integrator's grid or alpha");
    }
    if (!(cfg.dt > 0.0)) throw ConfigError("dt must be positive");
    if (!(cfg.cfl_safety > 0.0 && cfg.cfl_safety <= 1.0)) {
        throw ConfigError("cfl_safety must lie in (0, 1]");
    }
    const Formulation form = st.formulation;
    const double dt = cfg.dt;
    const ComplexArray v = st.vort.spectral_values();
    const ComplexArray r = st.rho.spectral_values();
    const std::size_t m = v.size();

    ComplexArray av, ar;
    double umax = 0.0;
    ops_.nonlinear(form, v, r, av, ar, &umax);
    if (umax > 0.0 && dt > cfg.cfl_safety * st.grid().spacing() / umax) {
        throw NumericalError("CFL violation: dt = " + std::to_string(dt) +
                             " exceeds cfl_safety * h / max|u| with max|u| = " +
                             std::to_string(umax));
    }

    const RealArray& lam = ops_.dissipation();
    RealArray e_half(m), e_full(m);
    for (std::size_t i = 0; i < m; ++i) {
        e_half[i] = std::exp(-0.5 * dt * lam[i]);
        e_full[i] = e_half[i] * e_half[i];
    }

    ComplexArray sv(m), sr(m), bv, br, cv, cr, dv, dr;
    for (std::size_t i = 0; i < m; ++i) {
        sv[i] = e_half[i] * (v[i] + 0.5 * dt * av[i]);
        sr[i] = r[i] + 0.5 * dt * ar[i];
    }
    ops_.nonlinear(form, sv, sr, bv, br);
    for (std::size_t i = 0; i < m; ++i) {
        sv[i] = e_half[i] * v[i] + 0.5 * dt * bv[i];
        sr[i] = r[i] + 0.5 * dt * br[i];
    }
    ops_.nonlinear(form, sv, sr, cv, cr);
    for (std::size_t i = 0; i < m; ++i) {
        sv[i] = e_full[i] * v[i] + dt * e_half[i] * cv[i];
        sr[i] = r[i] + dt * cr[i];
    }
    ops_.nonlinear(form, sv, sr, dv, dr);

    ComplexArray nv(m), nr(m);
    const double w = dt / 6.0;
    for (std::size_t i = 0; i < m; ++i) {
        nv[i] = e_full[i] * v[i] +
                w * (e_full[i] * av[i] + 2.0 * e_half[i] * (bv[i] + cv[i]) + dv[i]);
        nr[i] = r[i] + w * (ar[i] + 2.0 * (br[i] + cr[i]) + dr[i]);
    }
    if (form == Formulation::Vorticity) nv[0] = 0.0;

    return SolverState(ScalarField::from_spectral(st.grid(), std::move(nr)),
                       ScalarField::from_spectral(st.grid(), std::move(nv)), form, st.t + dt,
                       st.alpha);
}

SolverState step(const SolverState& state, const StepperConfig& cfg) {
    return Integrator(state.grid(), state.alpha).step(state, cfg);
}

}  // namespace fbq
