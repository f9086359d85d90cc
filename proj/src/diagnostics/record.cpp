#include "fbq/diagnostics/record.hpp"

#include <cmath>
#include <cstdio>

#include "fbq/dynamics/boussinesq.hpp"
#include "fbq/errors.hpp"
#include "fbq/multipliers/operators.hpp"
#include "fbq/spectral/norms.hpp"
#include "fbq/spectral/spectral_ops.hpp"

namespace fbq {
namespace {

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) throw NumericalError(std::string("non-finite value in ") + name);
}

double lip_surrogate(const VectorField& u) {
    double m = 0.0;
    for (const ScalarField* c : {&u.x1, &u.x2}) {
        const ScalarField cs = forward_transform(*c);
        for (Axis a : {Axis::X1, Axis::X2}) m = std::max(m, lq_norm(partial_derivative(cs, a), kInfinity));
    }
    return m;
}

}  // namespace

double tail_energy_fraction(const SpectralGrid& grid, const ComplexArray& c) {
    const int n = grid.n();
    double total = 0.0, tail = 0.0;
    for_each_mode(grid, [&](std::size_t idx, int k1, int k2) {
        if (idx == 0) return;
        const double e = grid.hermitian_weight(k2) * std::norm(c[idx]);
        total += e;
        const int kmax = std::max(std::abs(k1), k2);
        if (9 * kmax > 2 * n) tail += e;
    });
    return total > 0.0 ? tail / total : 0.0;
}

DiagnosticsRecord sample(const SolverState& st, const DiagnosticsConfig& cfg,
                         const DiagnosticsRecord* previous) {
    const SpectralGrid& g = st.grid();
    for (double v : st.rho.physical_values()) require_finite(v, "rho");
    for (double v : st.vort.physical_values()) {
        require_finite(v, st.formulation == Formulation::Zeta ? "zeta" : "omega");
    }
    const SolverState as_zeta = convert(st, Formulation::Zeta);
    const SolverState as_omega = convert(st, Formulation::Vorticity);
    const ScalarField& rho = st.rho;
    const ScalarField& zeta = as_zeta.vort;
    const ScalarField& omega = as_omega.vort;

    DiagnosticsRecord r;
    r.t = st.t;
    require_finite(r.t, "t");
    for (double q : cfg.rho_q) {
        const double v = lq_norm(rho, q);
        require_finite(v, "lqRho");
        r.lq_rho.emplace_back(q, v);
    }
    r.lq_zeta = lq_norm(zeta, cfg.q);
    require_finite(r.lq_zeta, "lqZeta");
    r.lq_omega = lq_norm(omega, cfg.q);
    require_finite(r.lq_omega, "lqOmega");
    r.lq_s_rho = lq_norm(s_operator(rho, st.alpha), cfg.q);
    require_finite(r.lq_s_rho, "lqSRho");
    r.sobolev_rho = sobolev_norm(rho, cfg.s, cfg.q);
    require_finite(r.sobolev_rho, "sobolevRhoSQ");
    r.sobolev_zeta = sobolev_norm(zeta, std::max(cfg.s - 1.0, 0.0), cfg.q);
    require_finite(r.sobolev_zeta, "sobolevZeta");

    const VectorField u = biot_savart(omega);
    r.lq_u = lq_norm(magnitude(u), cfg.q);
    require_finite(r.lq_u, "lqU");
    r.lip_u = lip_surrogate(u);
    require_finite(r.lip_u, "lipU");

    RealArray zp = zeta.physical_values();
    for (double& x : zp) x = std::pow(std::abs(x), 0.5 * cfg.q);
    const double half =
        lq_norm(fractional_laplacian(ScalarField::from_physical(g, std::move(zp)), 0.5 * st.alpha), 2.0);
    r.diss_rate = half * half;
    require_finite(r.diss_rate, "dissRate");
    r.diss_integral = previous ? previous->diss_integral +
                                     0.5 * (r.t - previous->t) * (r.diss_rate + previous->diss_rate)
                               : 0.0;
    require_finite(r.diss_integral, "dissIntegral");

    r.tail_energy = std::max(tail_energy_fraction(g, rho.spectral_values()),
                             tail_energy_fraction(g, omega.spectral_values()));
    require_finite(r.tail_energy, "tailEnergy");
    return r;
}

std::string rho_key(double q) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "lqRho_%g", q);
    return buf;
}

std::vector<std::string> record_keys(const DiagnosticsConfig& cfg) {
    std::vector<std::string> keys = {"t"};
    for (double q : cfg.rho_q) keys.push_back(rho_key(q));
    for (const char* k : {"lqZeta", "lqOmega", "lqSRho", "sobolevRhoSQ", "sobolevZeta", "lqU",
                          "lipU", "dissRate", "dissIntegral", "tailEnergy"}) {
        keys.emplace_back(k);
    }
    return keys;
}

nlohmann::ordered_json to_json(const DiagnosticsRecord& r) {
    nlohmann::ordered_json j;
    j["t"] = r.t;
    for (const auto& [q, v] : r.lq_rho) j[rho_key(q)] = v;
    j["lqZeta"] = r.lq_zeta;
    j["lqOmega"] = r.lq_omega;
    j["lqSRho"] = r.lq_s_rho;
    j["sobolevRhoSQ"] = r.sobolev_rho;
    j["sobolevZeta"] = r.sobolev_zeta;
    j["lqU"] = r.lq_u;
    j["lipU"] = r.lip_u;
    j["dissRate"] = r.diss_rate;
    j["dissIntegral"] = r.diss_integral;
    j["tailEnergy"] = r.tail_energy;
    return j;
}

std::vector<std::pair<double, double>> series(const std::vector<DiagnosticsRecord>& records,
                                              const std::string& key) {
    std::vector<std::pair<double, double>> out;
    out.reserve(records.size());
    for (const DiagnosticsRecord& r : records) {
        const nlohmann::ordered_json j = to_json(r);
        if (!j.contains(key)) throw ConfigError("unknown diagnostics key: " + key);
        out.emplace_back(r.t, j[key].get<double>());
    }
    return out;
}

}  // namespace fbq
