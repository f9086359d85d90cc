#include "fbq/diagnostics/verdict.hpp"

#include <cmath>
#include <limits>

#include "fbq/errors.hpp"

namespace fbq {
namespace {

nlohmann::ordered_json number(double v) {
    if (std::isfinite(v)) return v;
    if (std::isnan(v)) return "nan";
    return v > 0 ? "inf" : "-inf";
}

}  // namespace

std::vector<std::string> tracked_norms(const DiagnosticsConfig& cfg) {
    std::vector<std::string> keys;
    for (double q : cfg.rho_q) keys.push_back(rho_key(q));
    for (const char* k : {"lqZeta", "lqOmega", "lqSRho", "sobolevRhoSQ", "sobolevZeta", "lqU", "lipU"}) {
        keys.emplace_back(k);
    }
    return keys;
}

VerdictReport persistence_verdict(const std::vector<DiagnosticsRecord>& records,
                                  const DiagnosticsConfig& cfg) {
    if (records.empty()) throw ConfigError("persistence verdict needs at least one record");
    VerdictReport rep;

    bool envelope_ok = true;
    for (const std::string& key : tracked_norms(cfg)) {
        const auto s = series(records, key);
        bool finite = true;
        for (const auto& [t, v] : s) finite = finite && std::isfinite(v);
        if (!finite) {
            envelope_ok = false;
            EnvelopeFit bad;
            bad.quantity = key;
            bad.A = bad.B = bad.max_rel_excess = std::numeric_limits<double>::quiet_NaN();
            rep.fits.push_back(bad);
            continue;
        }
        EnvelopeFit fit = fit_envelope(s, cfg.floor, key);
        if (!fit.degenerate &&
            !(std::isfinite(fit.A) && std::isfinite(fit.B) && fit.B <= cfg.growth_ceiling &&
              fit.max_rel_excess <= 0.0)) {
            envelope_ok = false;
        }
        rep.fits.push_back(std::move(fit));
    }

    bool conservation_ok = true;
    for (std::size_t k = 0; k < cfg.rho_q.size(); ++k) {
        const double v0 = records.front().lq_rho.at(k).second;
        double worst = 0.0;
        for (const DiagnosticsRecord& r : records) {
            const double d = std::abs(r.lq_rho.at(k).second - v0);
            worst = std::max(worst, v0 > 0.0 ? d / v0 : d);
        }
        if (!(worst <= cfg.drift_tolerance)) conservation_ok = false;
        rep.drift.emplace_back(cfg.rho_q[k], worst);
    }

    bool resolved = true;
    for (const DiagnosticsRecord& r : records) {
        rep.max_tail_energy = std::max(rep.max_tail_energy, r.tail_energy);
        if (!(r.tail_energy < cfg.tail_threshold)) resolved = false;
    }

    rep.final_diss_integral = records.back().diss_integral;
    bool diss_ok = true;
    for (const DiagnosticsRecord& r : records) diss_ok = diss_ok && std::isfinite(r.diss_integral);
    if (diss_ok) rep.fits.push_back(fit_envelope(series(records, "dissIntegral"), cfg.floor, "dissIntegral"));

    if (!envelope_ok) rep.violated.emplace_back("envelope");
    if (!conservation_ok) rep.violated.emplace_back("conservation");
    if (!resolved) rep.violated.emplace_back("resolution");
    if (!diss_ok) rep.violated.emplace_back("dissipation");
    rep.passed = rep.violated.empty();
    return rep;
}

nlohmann::ordered_json to_json(const EnvelopeFit& fit) {
    nlohmann::ordered_json j;
    j["quantity"] = fit.quantity;
    j["A"] = number(fit.A);
    j["B"] = number(fit.B);
    j["maxRelExcess"] = number(fit.max_rel_excess);
    j["degenerate"] = fit.degenerate;
    return j;
}

nlohmann::ordered_json to_json(const VerdictReport& rep) {
    nlohmann::ordered_json j;
    j["verdict"] = rep.passed ? "PASS" : "FAIL";
    j["violated"] = rep.violated;
    j["maxTailEnergy"] = number(rep.max_tail_energy);
    j["dissIntegral"] = number(rep.final_diss_integral);
    nlohmann::ordered_json drift = nlohmann::ordered_json::object();
    for (const auto& [q, d] : rep.drift) drift[rho_key(q)] = number(d);
    j["drift"] = drift;
    j["envelopes"] = nlohmann::ordered_json::array();
    for (const EnvelopeFit& f : rep.fits) j["envelopes"].push_back(to_json(f));
    return j;
}

}  // namespace fbq
