#include <cmath>

#include "fbq/analysis/suites.hpp"
#include "fbq/app/config.hpp"
#include "fbq/dynamics/boussinesq.hpp"
#include "fbq/errors.hpp"
#include "fbq/spectral/norms.hpp"
#include "fbq/spectral/snapshot.hpp"

namespace fbq {
namespace {

ScalarField scaled_random(const SpectralGrid& g, const InitialCondition& ic, unsigned stream,
                          double target, double q) {
    ScalarField f = random_field(g, ic.field, stream_seed(ic.seed, stream));
    const double norm = lq_norm(f, q);
    if (norm == 0.0) return f;
    return (target / norm) * f;
}

ScalarField load(const SpectralGrid& g, const std::filesystem::path& path) {
    if (path.empty()) return ScalarField::zeros(g);
    ScalarField f = read_snapshot(path);
    if (!(f.grid() == g)) {
        throw ConfigError("snapshot " + path.string() + " has grid " + std::to_string(f.grid().n()) +
                          ", config asks for " + std::to_string(g.n()));
    }
    return f;
}

}  // namespace

SolverState initial_state(const RunConfig& cfg) {
    const SpectralGrid g(cfg.grid);
    const InitialCondition& ic = cfg.initial;
    const double q = cfg.diagnostics.q;
    ScalarField rho = ScalarField::zeros(g);
    ScalarField omega = ScalarField::zeros(g);
    if (ic.kind == "shear") {
        omega = ScalarField::sample(g, [](double x1, double) { return std::cos(x1); });
    } else if (ic.kind == "random" || ic.kind == "rough") {
        omega = scaled_random(g, ic, 0, ic.omega_norm, q);
        rho = scaled_random(g, ic, 1, ic.rho_norm, q);
    } else if (ic.kind == "file") {
        rho = load(g, ic.rho_file);
        omega = load(g, ic.omega_file);
    } else {
        throw ConfigError("unknown initial condition: " + ic.kind);
    }
    const SolverState s(std::move(rho), std::move(omega), Formulation::Vorticity, 0.0, cfg.alpha);
    return convert(s, cfg.formulation);
}

}  // namespace fbq
