#include "fbq/multipliers/hm_check.hpp"

#include <cmath>
#include <numbers>

#include "fbq/errors.hpp"

namespace fbq {
namespace {

using cplx = std::complex<double>;

cplx fd_derivative(const MultiplierSpec& m, int b1, int b2, double x1, double x2, double h) {
    auto f = [&](double dx, double dy) { return m(x1 + dx, x2 + dy); };
    if (b1 == 0 && b2 == 0) return f(0, 0);
    if (b1 == 1 && b2 == 0) return (f(h, 0) - f(-h, 0)) / (2 * h);
    if (b1 == 0 && b2 == 1) return (f(0, h) - f(0, -h)) / (2 * h);
    if (b1 == 2 && b2 == 0) return (f(h, 0) - 2.0 * f(0, 0) + f(-h, 0)) / (h * h);
    if (b1 == 0 && b2 == 2) return (f(0, h) - 2.0 * f(0, 0) + f(0, -h)) / (h * h);
    return (f(h, h) - f(h, -h) - f(-h, h) + f(-h, -h)) / (4 * h * h);
}

}  // namespace

HmDecayReport hm_decay_check(const MultiplierSpec& m, int max_order, HmSampling sampling) {
    if (max_order < 0 || max_order > 2) throw ConfigError("hm_decay_check supports orders 0..2");
    if (sampling.radii < 2 || sampling.angles < 1 || !(sampling.min_radius > 0.0) ||
        !(sampling.max_radius > sampling.min_radius)) {
        throw ConfigError("invalid HM sampling");
    }

    HmDecayReport report;
    report.symbol = m.name();
    for (int order = 0; order <= max_order; ++order) {
        for (int b1 = order; b1 >= 0; --b1) report.entries.push_back({b1, order - b1});
    }

    const double log_lo = std::log10(sampling.min_radius);
    const double log_hi = std::log10(sampling.max_radius);
    for (int r = 0; r < sampling.radii; ++r) {
        const double rad = std::pow(10.0, log_lo + (log_hi - log_lo) * r / (sampling.radii - 1));
        const double h = 1e-4 * std::max(rad, 1.0);
        for (int a = 0; a < sampling.angles; ++a) {
            const double th = 2.0 * std::numbers::pi * (a + 0.5) / sampling.angles;
            const double x1 = rad * std::cos(th);
            const double x2 = rad * std::sin(th);
            ++report.samples;
            for (HmEntry& e : report.entries) {
                const double v = std::pow(rad, e.beta1 + e.beta2) *
                                 std::abs(fd_derivative(m, e.beta1, e.beta2, x1, x2, h));
                if (!std::isfinite(v)) {
                    report.failures.push_back({e.beta1, e.beta2, x1, x2});
                    continue;
                }
                if (v > e.sup) {
                    e.sup = v;
                    e.xi1_at_sup = x1;
                    e.xi2_at_sup = x2;
                }
            }
        }
    }
    return report;
}

}  // namespace fbq
