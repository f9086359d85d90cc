/// @file acceptance.cpp
/// @brief End-to-end acceptance checks. Prints one PASS/FAIL line per
/// criterion and exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "fbq/analysis/suites.hpp"
#include "fbq/app/commands.hpp"
#include "fbq/dynamics/integrator.hpp"
#include "fbq/multipliers/hm_check.hpp"
#include "fbq/multipliers/operators.hpp"
#include "fbq/spectral/norms.hpp"

using namespace fbq;

namespace {

int failures = 0;

void report(bool ok, const std::string& name, const std::string& detail) {
    std::printf("%s  %s: %s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

template <class... Args>
std::string fmt(const char* f, Args... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double rel_l2(const ScalarField& a, const ScalarField& b) {
    const double den = lq_norm(b, 2.0);
    return lq_norm(a - b, 2.0) / den;
}

double detail(const InequalityReport& r, const char* key) {
    const auto& v = r.details.at(key);
    return v.is_number() ? v.get<double>() : NAN;
}

SolverState advance(SolverState s, double T, double dt) {
    const Integrator it(s.grid(), s.alpha);
    const long steps = std::lround(T / dt);
    const StepperConfig cfg{T / static_cast<double>(steps), Scheme::IFRK4, 0.5};
    for (long i = 0; i < steps; ++i) s = it.step(s, cfg);
    return s;
}

RunConfig smooth_run(int grid, double T) {
    RunConfig c = preset_config("random");
    c.grid = grid;
    c.T = T;
    c.initial.seed = 2024;
    return c;
}

void shear_exactness() {
    double worst = 0.0;
    for (double alpha : {1.2, 1.5, 1.9}) {
        const SpectralGrid g(64);
        const auto cos1 = [](double x1, double) { return std::cos(x1); };
        const SolverState s0(ScalarField::zeros(g), ScalarField::sample(g, cos1), Formulation::Vorticity, 0.0, alpha);
        const SolverState s = advance(s0, 1.0, 1e-3);
        const ScalarField exact = std::exp(-1.0) * ScalarField::sample(g, cos1);
        worst = std::max(worst, lq_norm(s.vort - exact, 2.0) / lq_norm(s.vort, 2.0));
    }
    report(worst <= 1e-8, "shear-mode exactness",
           fmt("max relative L2 error %.3e over alpha in {1.2,1.5,1.9} (tol 1e-8)", worst));
}

void density_conservation() {
    const RunResult r = run_simulation(smooth_run(128, 1.0));
    double worst = 0.0;
    std::string per_q;
    for (const auto& [q, d] : r.verdict.drift) {
        worst = std::max(worst, d);
        per_q += fmt(" q=%g:%.2e", q, d);
    }
    report(worst <= 1e-6, "density conservation", "relative drift" + per_q + " (tol 1e-6)");
}

void formulation_equivalence() {
    // Steps shrink with the grid spacing so the comparison refines in space and time.
    double diff[2];
    const int grids[2] = {128, 256};
    for (int k = 0; k < 2; ++k) {
        const RunConfig c = smooth_run(grids[k], 1.0);
        RunConfig cw = c;
        cw.formulation = Formulation::Vorticity;
        const SolverState w0 = initial_state(cw);
        const double dt = 0.02 * 128.0 / grids[k];
        const SolverState w = advance(w0, 1.0, dt);
        const SolverState z = advance(convert(w0, Formulation::Zeta), 1.0, dt);
        diff[k] = rel_l2(convert(z, Formulation::Vorticity).vort, w.vort);
    }
    report(diff[0] <= 1e-6 && diff[1] < diff[0], "formulation equivalence",
           fmt("relative L2 difference of omega(T): n=128 %.3e (tol 1e-6), n=256 %.3e (must decrease)",
               diff[0], diff[1]));
}

void commutator_identity() {
    SuiteOptions o;
    o.trials = 64;
    o.seed = 7;
    o.grid = 128;
    o.s = 1.5;
    o.alpha = 1.5;
    const InequalityReport r = run_suite("identity", o);
    const double res = detail(r, "max_residual");
    report(r.passed && res <= 1e-10, "commutator identity",
           fmt("max residual %.3e over 64 trials, s=1.5 alpha=1.5 n=128 (tol 1e-10)", res));
}

void cordoba() {
    SuiteOptions o;
    o.trials = 64;
    const InequalityReport sweep = run_suite("cordoba", o);
    o.p = 2.0;
    o.s = 1.0;
    o.nonnegative = true;
    const InequalityReport eq = run_suite("cordoba", o);
    const bool ok = sweep.passed && sweep.worst_margin >= -1e-10 && std::abs(eq.worst_margin) <= 1e-10;
    report(ok, "Cordoba-Cordoba",
           fmt("min relative margin %.3e over 64 trials x p{2,4,6} x s{0.5,1,1.5} (>= -1e-10); "
               "equality case p=2 theta>=0 margin %.3e (|.| <= 1e-10)",
               sweep.worst_margin, eq.worst_margin));
}

void n_smoothing() {
    SuiteOptions o;
    o.trials = 64;
    o.grid = 64;
    o.fine_grid = 256;
    o.alpha = 1.5;
    o.q = 4.0;
    const InequalityReport r = run_suite("nsmooth", o);
    const double change = detail(r, "relative_change");
    const HmDecayReport hm = hm_decay_check(symbols::m_tilde(1.5), 2);
    double hm_max = 0.0;
    bool finite = hm.all_finite() && hm.entries.size() == 6;
    for (const HmEntry& e : hm.entries) {
        finite = finite && std::isfinite(e.sup);
        hm_max = std::max(hm_max, e.sup);
    }
    report(r.passed && std::abs(change) < 0.10 && finite, "N smoothing",
           fmt("ratio max %.4f (n=64) -> %.4f (n=256), change %.2e (< 10%%); m_tilde HM sups finite, max %.3f",
               detail(r, "max_ratio_coarse"), detail(r, "max_ratio_fine"), change, hm_max));
}

void inequality_ratios() {
    SuiteOptions o;
    o.trials = 64;
    bool ok = true;
    std::string text;
    for (const char* name : {"gn", "kp", "ikp"}) {
        const InequalityReport r = run_suite(name, o);
        const double lo = detail(r, "max_ratio_coarse"), hi = detail(r, "max_ratio_fine");
        const double growth = hi / lo - 1.0;
        ok = ok && r.passed && std::isfinite(lo) && std::isfinite(hi) && growth < 0.15;
        text += fmt("%s growth %+.2e; ", name, growth);
        if (std::string(name) == "gn") {
            const double dev = detail(r, "endpoint_max_deviation");
            ok = ok && dev <= 1e-12;
            text += fmt("gn endpoint |ratio-1| %.1e; ", dev);
        }
    }
    report(ok, "inequality ratios", text + "n=128 -> 256 (growth < 15%, endpoint <= 1e-12)");
}

void persistence() {
    const auto t0 = std::chrono::steady_clock::now();
    const RunConfig c = preset_config("persistence");
    const SolverState s0 = initial_state(c);
    const double w0 = lq_norm(convert(s0, Formulation::Vorticity).vort, c.diagnostics.q);
    const RunResult r = run_simulation(c, s0);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool envelopes = true;
    double bmax = -INFINITY;
    for (const EnvelopeFit& f : r.verdict.fits) {
        envelopes = envelopes && std::isfinite(f.A) && std::isfinite(f.B) && f.max_rel_excess <= 0.0;
        bmax = std::max(bmax, f.B);
    }
    const bool witness = r.verdict.passed && r.verdict.max_tail_energy < 1e-6 && envelopes;

    RunConfig neg = preset_config("underresolved");
    const RunResult n = run_simulation(neg);
    bool tail_clause = false;
    for (const std::string& v : n.verdict.violated) tail_clause = tail_clause || v == "resolution";
    const bool control = !n.verdict.passed && tail_clause;

    report(witness && control, "persistence witness",
           fmt("n=256 T=5 ||omega0||_4=%.2f: max tailEnergy %.2e (< 1e-6), envelopes finite (max B %.3f), "
               "verdict %s in %.0fs; n=32 rough control %s",
               w0, r.verdict.max_tail_energy, bmax, r.verdict.passed ? "PASS" : "FAIL", secs,
               control ? "FAILs on resolution" : "did not fail on resolution"));
}

void time_order() {
    RunConfig c = smooth_run(64, 1.0);
    c.formulation = Formulation::Zeta;
    const SolverState s0 = initial_state(c);
    const ScalarField a = convert(advance(s0, 1.0, 0.04), Formulation::Vorticity).vort;
    const ScalarField b = convert(advance(s0, 1.0, 0.02), Formulation::Vorticity).vort;
    const ScalarField d = convert(advance(s0, 1.0, 0.01), Formulation::Vorticity).vort;
    const double e1 = lq_norm(a - b, 2.0), e2 = lq_norm(b - d, 2.0);
    const double order = std::log2(e1 / e2);
    report(order >= 3.7, "time-integrator order",
           fmt("Richardson order %.3f from dt 0.04/0.02/0.01 (differences %.2e, %.2e; need >= 3.7)", order, e1, e2));
}

}  // namespace

int main() {
    shear_exactness();
    density_conservation();
    formulation_equivalence();
    commutator_identity();
    cordoba();
    n_smoothing();
    inequality_ratios();
    persistence();
    time_order();
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
