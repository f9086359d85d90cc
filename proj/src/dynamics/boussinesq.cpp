#include "fbq/dynamics/boussinesq.hpp"

#include <cmath>

#include "fbq/errors.hpp"
#include "fbq/multipliers/operators.hpp"
#include "fbq/spectral/fft.hpp"
#include "fbq/spectral/spectral_ops.hpp"

namespace fbq {

BoussinesqOperators::BoussinesqOperators(const SpectralGrid& grid, double alpha)
    : grid_(grid),
      alpha_(alpha),
      d1_(grid, symbols::derivative(Axis::X1)),
      d2_(grid, symbols::derivative(Axis::X2)),
      s_(grid, symbols::s_operator(alpha)),
      n_(grid, symbols::n_operator(alpha)),
      dissipation_(grid.spectral_size()),
      inv_laplacian_(grid.spectral_size()),
      keep_(grid.spectral_size()) {
    require_alpha(alpha);
    const double sc = grid.wavenumber_scale();
    for_each_mode(grid, [&](std::size_t idx, int k1, int k2) {
        const double xi2 = sc * sc * (static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2);
        dissipation_[idx] = std::pow(xi2, 0.5 * alpha);
        inv_laplacian_[idx] = xi2 > 0.0 ? -1.0 / xi2 : 0.0;
        keep_[idx] = inside_dealias_band(grid, k1, k2) ? 1 : 0;
    });
}

void BoussinesqOperators::velocity(const ComplexArray& omega, ComplexArray& u1,
                                   ComplexArray& u2) const {
    const auto& d1 = d1_.values();
    const auto& d2 = d2_.values();
    u1.resize(omega.size());
    u2.resize(omega.size());
    for (std::size_t i = 0; i < omega.size(); ++i) {
        const std::complex<double> psi = inv_laplacian_[i] * omega[i];
        u1[i] = -d2[i] * psi;
        u2[i] = d1[i] * psi;
    }
}

ComplexArray BoussinesqOperators::omega_of(Formulation f, const ComplexArray& vort,
                                           const ComplexArray& rho) const {
    if (f == Formulation::Vorticity) return vort;
    ComplexArray w = rho;
    s_.apply(w);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += vort[i];
    return w;
}

void BoussinesqOperators::advect(const RealArray& u1, const RealArray& u2, const ComplexArray& f,
                                 ComplexArray& out) const {
    thread_local ComplexArray g1, g2;
    thread_local RealArray p1, p2;
    g1 = f;
    g2 = f;
    d1_.apply(g1);
    d2_.apply(g2);
    p1.resize(u1.size());
    p2.resize(u1.size());
    inverse_fft(grid_, g1, p1);
    inverse_fft(grid_, g2, p2);
    for (std::size_t i = 0; i < p1.size(); ++i) p1[i] = u1[i] * p1[i] + u2[i] * p2[i];
    out.resize(f.size());
    forward_fft(grid_, p1, out);
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (!keep_[i]) out[i] = 0.0;
    }
    // Advection of a periodic field by a solenoidal velocity has zero mean.
    out[0] = 0.0;
}

void BoussinesqOperators::nonlinear(Formulation f, const ComplexArray& vort,
                                    const ComplexArray& rho, ComplexArray& dvort,
                                    ComplexArray& drho, double* max_speed) const {
    ComplexArray omega = omega_of(f, vort, rho);
    omega[0] = 0.0;
    ComplexArray u1h, u2h;
    velocity(omega, u1h, u2h);
    RealArray u1(grid_.physical_size()), u2(grid_.physical_size());
    inverse_fft(grid_, u1h, u1);
    inverse_fft(grid_, u2h, u2);
    if (max_speed) {
        double m = 0.0;
        for (std::size_t i = 0; i < u1.size(); ++i) m = std::max(m, std::hypot(u1[i], u2[i]));
        *max_speed = m;
    }

    ComplexArray adv_rho;
    advect(u1, u2, rho, adv_rho);
    drho.resize(rho.size());
    for (std::size_t i = 0; i < rho.size(); ++i) drho[i] = -adv_rho[i];

    ComplexArray adv_vort;
    advect(u1, u2, vort, adv_vort);
    dvort.resize(vort.size());
    if (f == Formulation::Vorticity) {
        const auto& d1 = d1_.values();
        for (std::size_t i = 0; i < vort.size(); ++i) dvort[i] = -adv_vort[i] + d1[i] * rho[i];
        return;
    }

    // [S, u.grad] rho - N rho
    ComplexArray s_adv = adv_rho;
    s_.apply(s_adv);
    ComplexArray s_rho = rho;
    s_.apply(s_rho);
    ComplexArray adv_s_rho;
    advect(u1, u2, s_rho, adv_s_rho);
    ComplexArray n_rho = rho;
    n_.apply(n_rho);
    for (std::size_t i = 0; i < vort.size(); ++i) {
        dvort[i] = -adv_vort[i] + (s_adv[i] - adv_s_rho[i]) - n_rho[i];
    }
}

VectorField biot_savart(const ScalarField& omega) {
    const SpectralGrid& g = omega.grid();
    const ComplexArray w = omega.spectral_values();
    const double npts = static_cast<double>(g.physical_size());
    const double rms = std::sqrt(spectral_energy(g, w)) / npts;
    if (std::abs(w[0].real() / npts) > 1e-12 * std::max(1.0, rms)) {
        throw ConfigError("Biot-Savart needs a mean-free vorticity");
    }
    // Only the derivative symbols are needed; alpha is irrelevant here.
    const LatticeSymbol d1(g, symbols::derivative(Axis::X1));
    const LatticeSymbol d2(g, symbols::derivative(Axis::X2));
    const double sc = g.wavenumber_scale();
    ComplexArray u1(w.size()), u2(w.size());
    for_each_mode(g, [&](std::size_t idx, int k1, int k2) {
        const double xi2 = sc * sc * (static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2);
        const std::complex<double> psi = xi2 > 0.0 ? -w[idx] / xi2 : 0.0;
        u1[idx] = -d2.values()[idx] * psi;
        u2[idx] = d1.values()[idx] * psi;
    });
    return VectorField(ScalarField::from_spectral(g, std::move(u1)),
                       ScalarField::from_spectral(g, std::move(u2)));
}

namespace {

Tendency full_rhs(const SolverState& st, Formulation expected) {
    if (st.formulation != expected) {
        throw ConfigError("state is in the " + std::string(to_string(st.formulation)) +
                          " formulation");
    }
    const BoussinesqOperators ops(st.grid(), st.alpha);
    const ComplexArray v = st.vort.spectral_values();
    const ComplexArray r = st.rho.spectral_values();
    if (expected == Formulation::Vorticity) biot_savart(st.vort);  // mean check
    ComplexArray dv, dr;
    ops.nonlinear(expected, v, r, dv, dr);
    const RealArray& lam = ops.dissipation();
    for (std::size_t i = 0; i < dv.size(); ++i) dv[i] -= lam[i] * v[i];
    return {ScalarField::from_spectral(st.grid(), std::move(dv)),
            ScalarField::from_spectral(st.grid(), std::move(dr))};
}

}  // namespace

Tendency rhs_vorticity(const SolverState& state) {
    return full_rhs(state, Formulation::Vorticity);
}

Tendency rhs_zeta(const SolverState& state) { return full_rhs(state, Formulation::Zeta); }

SolverState convert(const SolverState& state, Formulation to) {
    if (state.formulation == to) return state;
    const ScalarField s_rho = s_operator(state.rho, state.alpha);
    ScalarField v = to == Formulation::Zeta ? state.vort - s_rho : state.vort + s_rho;
    return SolverState(state.rho, std::move(v), to, state.t, state.alpha);
}

}  // namespace fbq
