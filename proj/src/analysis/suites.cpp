#include "fbq/analysis/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "fbq/analysis/commutators.hpp"
#include "fbq/analysis/inequalities.hpp"
#include "fbq/errors.hpp"
#include "fbq/multipliers/hm_check.hpp"
#include "fbq/multipliers/operators.hpp"
#include "fbq/multipliers/smoothing.hpp"
#include "fbq/spectral/norms.hpp"

namespace fbq {
namespace {

using json = nlohmann::ordered_json;

// Non-finite values are not representable in JSON; report them as strings.
json number(double v) {
    if (std::isfinite(v)) return v;
    if (std::isnan(v)) return "nan";
    return v > 0 ? "inf" : "-inf";
}

int fine_grid_of(const SuiteOptions& o) { return o.fine_grid > 0 ? o.fine_grid : 2 * o.grid; }

std::uint64_t trial_seed(const SuiteOptions& o, int t) {
    return o.seed + static_cast<std::uint64_t>(t);
}

struct TrialMax {
    double value = 0.0;
    std::uint64_t seed = 0;
    bool all_finite = true;
    bool any = false;

    void add(double v, std::uint64_t s) {
        if (!std::isfinite(v)) {
            if (all_finite) seed = s;
            all_finite = false;
            return;
        }
        if (all_finite && (!any || v > value)) {
            value = v;
            seed = s;
        }
        any = true;
    }
};

// Runs a per-trial ratio on two grids and scores its refinement growth.
InequalityReport refinement_report(
    const std::string& name, const SuiteOptions& o, double allowed,
    bool two_sided, const std::function<double(const SpectralGrid&, std::uint64_t)>& trial) {
    const SpectralGrid coarse(o.grid);
    const SpectralGrid fine(fine_grid_of(o));
    TrialMax mc, mf;
    for (int t = 0; t < o.trials; ++t) {
        const std::uint64_t s = trial_seed(o, t);
        mc.add(trial(coarse, s), s);
        mf.add(trial(fine, s), s);
    }
    InequalityReport r;
    r.name = name;
    r.trials = o.trials;
    r.tolerance = 0.0;
    const double change = mf.value / mc.value - 1.0;
    if (!mc.all_finite || !mf.all_finite || !std::isfinite(change)) {
        r.worst_margin = -kInfinity;
        r.worst_seed = !mc.all_finite ? mc.seed : mf.seed;
    } else {
        r.worst_margin = allowed - (two_sided ? std::abs(change) : change);
        r.worst_seed = mf.seed;
    }
    r.passed = r.worst_margin >= -r.tolerance;
    r.details["grid"] = o.grid;
    r.details["fine_grid"] = fine.n();
    r.details["max_ratio_coarse"] = number(mc.value);
    r.details["max_ratio_fine"] = number(mf.value);
    r.details["relative_change"] = number(change);
    r.details["allowed_change"] = allowed;
    return r;
}

}  // namespace

std::uint64_t stream_seed(std::uint64_t trial_seed, unsigned stream) {
    // splitmix64 finalizer
    std::uint64_t z = trial_seed * 0x9E3779B97F4A7C15ULL + (static_cast<std::uint64_t>(stream) + 1) *
                                                               0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

json to_json(const InequalityReport& r) {
    json j;
    j["name"] = r.name;
    j["trials"] = r.trials;
    j["worstMargin"] = number(r.worst_margin);
    j["worstSeed"] = r.worst_seed;
    j["tolerance"] = r.tolerance;
    j["passed"] = r.passed;
    j["details"] = r.details;
    return j;
}

InequalityReport run_identity_suite(const SuiteOptions& o) {
    const double s = o.s.value_or(1.5);
    const SpectralGrid grid(o.grid);
    const std::vector<MultiplierSpec> extra = {
        symbols::bessel_potential(0.7), symbols::riesz_bessel(), symbols::m_tilde(o.alpha)};

    double worst = 0.0, worst_generic = 0.0;
    std::uint64_t worst_seed = trial_seed(o, 0);
    for (int t = 0; t < o.trials; ++t) {
        const std::uint64_t ts = trial_seed(o, t);
        const VectorField u = random_solenoidal_field(grid, o.field, stream_seed(ts, 0));
        const ScalarField rho = random_field(grid, o.field, stream_seed(ts, 1));
        double res = commutator_identity_residual(u, rho, s, o.alpha);
        for (const MultiplierSpec& m : extra) {
            const double g = commutator_identity_residual(u, rho, m, o.alpha);
            worst_generic = std::max(worst_generic, std::isfinite(g) ? g : kInfinity);
            res = std::max(res, g);
        }
        if (!std::isfinite(res) || res > worst) {
            worst = std::isfinite(res) ? res : kInfinity;
            worst_seed = ts;
        }
    }
    InequalityReport r;
    r.name = "identity";
    r.trials = o.trials;
    r.tolerance = 0.0;
    r.worst_margin = 1e-10 - worst;
    r.worst_seed = worst_seed;
    r.passed = r.worst_margin >= -r.tolerance;
    r.details["grid"] = o.grid;
    r.details["s"] = s;
    r.details["alpha"] = o.alpha;
    r.details["max_residual"] = number(worst);
    r.details["max_residual_generic_T"] = number(worst_generic);
    return r;
}

InequalityReport run_cordoba_suite(const SuiteOptions& o) {
    const SpectralGrid grid(o.grid);
    const std::vector<double> ps = o.p ? std::vector<double>{*o.p} : std::vector<double>{2, 4, 6};
    const std::vector<double> ss =
        o.s ? std::vector<double>{*o.s} : std::vector<double>{0.5, 1.0, 1.5};
    double worst = kInfinity;
    double worst_abs = 0.0;
    std::uint64_t worst_seed = trial_seed(o, 0);
    json cases = json::array();
    for (double p : ps) {
        for (double s : ss) {
            double case_min = kInfinity;
            for (int t = 0; t < o.trials; ++t) {
                const std::uint64_t ts = trial_seed(o, t);
                ScalarField theta = inverse_transform(random_field(grid, o.field, stream_seed(ts, 0)));
                if (o.nonnegative) {
                    const RealArray& v = theta.physical();
                    const double lo = *std::min_element(v.begin(), v.end());
                    theta = theta - ScalarField::constant(grid, lo);
                }
                const CordobaResult c = cordoba_check(theta, p, s);
                const double rel = c.lhs != 0.0 ? c.margin / std::abs(c.lhs) : 0.0;
                case_min = std::min(case_min, rel);
                if (rel < worst) {
                    worst = rel;
                    worst_abs = c.margin;
                    worst_seed = ts;
                }
            }
            cases.push_back({{"p", p}, {"s", s}, {"min_relative_margin", number(case_min)}});
        }
    }
    InequalityReport r;
    r.name = "cordoba";
    r.trials = o.trials;
    r.tolerance = 1e-10;
    r.worst_margin = worst;
    r.worst_seed = worst_seed;
    r.passed = std::isfinite(worst) && worst >= -r.tolerance;
    r.details["grid"] = o.grid;
    r.details["nonnegative"] = o.nonnegative;
    r.details["worst_absolute_margin"] = number(worst_abs);
    r.details["cases"] = cases;
    return r;
}

InequalityReport run_gn_suite(const SuiteOptions& o) {
    const double r_end = 2.0 * o.q / (2.0 - o.alpha);
    InequalityReport r = refinement_report(
        "gn", o, 0.15, false, [&](const SpectralGrid& g, std::uint64_t ts) {
            return gn_ratio(random_field(g, o.field, stream_seed(ts, 0)), o.q, r_end, o.alpha);
        });
    // Endpoint r = q collapses the exponents to (1, 0): the ratio is exactly 1.
    double endpoint_dev = 0.0;
    const SpectralGrid grid(o.grid);
    for (int t = 0; t < o.trials; ++t) {
        const ScalarField z = random_field(grid, o.field, stream_seed(trial_seed(o, t), 0));
        endpoint_dev = std::max(endpoint_dev, std::abs(gn_ratio(z, o.q, o.q, o.alpha) - 1.0));
    }
    r.details["q"] = o.q;
    r.details["r"] = r_end;
    r.details["alpha"] = o.alpha;
    r.details["endpoint_max_deviation"] = number(endpoint_dev);
    if (!(endpoint_dev <= 1e-12)) {
        r.worst_margin = std::min(r.worst_margin, 1e-12 - endpoint_dev);
        r.passed = false;
    }
    return r;
}

InequalityReport run_kp_suite(const SuiteOptions& o) {
    const double s = o.s.value_or(0.5);
    const HolderExponents e{o.q, 2 * o.q, 2 * o.q, 2 * o.q, 2 * o.q};
    InequalityReport r = refinement_report(
        "kp", o, 0.15, false, [&](const SpectralGrid& g, std::uint64_t ts) {
            const ScalarField gg = random_field(g, o.field, stream_seed(ts, 0));
            const ScalarField ff = random_field(g, o.field, stream_seed(ts, 1));
            return std::max(kato_ponce_ratio(gg, ff, s, Axis::X1, e),
                            kato_ponce_ratio(gg, ff, s, Axis::X2, e));
        });
    r.details["s"] = s;
    r.details["q"] = o.q;
    r.details["holder"] = {e.q1, e.q1t, e.q2, e.q2t};
    return r;
}

InequalityReport run_ikp_suite(const SuiteOptions& o) {
    const HolderExponents e{o.q, 2 * o.q, 2 * o.q, 2 * o.q, 2 * o.q};
    const std::vector<double> mus = {0.0, 0.5 * o.alpha, o.alpha};
    InequalityReport r = refinement_report(
        "ikp", o, 0.15, false, [&](const SpectralGrid& g, std::uint64_t ts) {
            const ScalarField gg = random_field(g, o.field, stream_seed(ts, 0));
            const ScalarField ff = random_field(g, o.field, stream_seed(ts, 1));
            double m = 0.0;
            for (double mu : mus) {
                for (Axis j : {Axis::X1, Axis::X2}) {
                    const double v = inhom_kp_ratio(gg, ff, mu, j, o.alpha, e);
                    if (!std::isfinite(v)) return v;
                    m = std::max(m, v);
                }
            }
            return m;
        });
    r.details["alpha"] = o.alpha;
    r.details["mu"] = mus;
    r.details["q"] = o.q;
    r.details["holder"] = {e.q1, e.q1t, e.q2, e.q2t};
    return r;
}

InequalityReport run_nsmooth_suite(const SuiteOptions& o) {
    const SpectralGrid coarse(o.grid);
    const SpectralGrid fine(fine_grid_of(o));
    const SmoothingResult rc = n_smoothing_ratio(o.alpha, o.q, o.trials, o.seed, coarse, o.field);
    const SmoothingResult rf = n_smoothing_ratio(o.alpha, o.q, o.trials, o.seed, fine, o.field);
    const double change = rf.max_ratio / rc.max_ratio - 1.0;
    InequalityReport r;
    r.name = "nsmooth";
    r.trials = o.trials;
    r.tolerance = 0.0;
    r.worst_margin = std::isfinite(change) ? 0.10 - std::abs(change) : -kInfinity;
    r.worst_seed = rf.worst_seed;
    r.passed = r.worst_margin >= -r.tolerance;
    r.details["alpha"] = o.alpha;
    r.details["q"] = o.q;
    r.details["grid"] = o.grid;
    r.details["fine_grid"] = fine.n();
    r.details["max_ratio_coarse"] = number(rc.max_ratio);
    r.details["max_ratio_fine"] = number(rf.max_ratio);
    r.details["relative_change"] = number(change);
    return r;
}

InequalityReport run_hm_suite(const SuiteOptions& o) {
    require_alpha(o.alpha);
    const HmDecayReport hm = hm_decay_check(symbols::m_tilde(o.alpha), 2);
    InequalityReport r;
    r.name = "hm";
    r.trials = hm.samples;
    r.tolerance = 0.0;
    bool finite = hm.all_finite();
    json sups = json::array();
    for (const HmEntry& e : hm.entries) {
        finite = finite && std::isfinite(e.sup);
        sups.push_back({{"beta", {e.beta1, e.beta2}},
                        {"sup", number(e.sup)},
                        {"at", {e.xi1_at_sup, e.xi2_at_sup}}});
    }
    r.worst_margin = finite ? 0.0 : -kInfinity;
    r.passed = finite;
    r.details["symbol"] = hm.symbol;
    r.details["alpha"] = o.alpha;
    r.details["sups"] = sups;
    r.details["failures"] = hm.failures.size();
    return r;
}

InequalityReport run_suite(const std::string& name, const SuiteOptions& o) {
    if (o.trials < 1) throw ConfigError("trials must be >= 1");
    if (name == "identity") return run_identity_suite(o);
    if (name == "cordoba") return run_cordoba_suite(o);
    if (name == "gn") return run_gn_suite(o);
    if (name == "kp") return run_kp_suite(o);
    if (name == "ikp") return run_ikp_suite(o);
    if (name == "nsmooth") return run_nsmooth_suite(o);
    if (name == "hm") return run_hm_suite(o);
    throw ConfigError("unknown suite: " + name);
}

}  // namespace fbq
