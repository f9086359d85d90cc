#include "fbq/diagnostics/envelope.hpp"

#include <cmath>
#include <limits>

#include "fbq/errors.hpp"

namespace fbq {

EnvelopeFit fit_envelope(std::span<const std::pair<double, double>> s, double floor,
                         std::string quantity) {
    if (s.empty()) throw ConfigError("envelope fit needs a nonempty series");
    if (!(floor > 0.0)) throw ConfigError("envelope floor must be positive");
    EnvelopeFit fit;
    fit.quantity = std::move(quantity);
    fit.degenerate = true;
    for (const auto& [t, v] : s) {
        if (!(v >= 0.0) || !std::isfinite(t)) {
            throw ConfigError("envelope series must be finite and nonnegative");
        }
        if (v > floor) fit.degenerate = false;
    }

    const double n = static_cast<double>(s.size());
    double tbar = 0.0, ybar = 0.0;
    for (const auto& [t, v] : s) {
        tbar += t;
        ybar += std::log(std::max(v, floor));
    }
    tbar /= n;
    ybar /= n;
    double stt = 0.0, sty = 0.0;
    for (const auto& [t, v] : s) {
        stt += (t - tbar) * (t - tbar);
        sty += (t - tbar) * (std::log(std::max(v, floor)) - ybar);
    }
    fit.B = stt > 0.0 ? sty / stt : 0.0;

    // Smallest A that bounds every sample.
    double a = 0.0;
    for (const auto& [t, v] : s) a = std::max(a, std::max(v, floor) * std::exp(-fit.B * t));
    fit.A = a * (1.0 + 8.0 * std::numeric_limits<double>::epsilon());

    double excess = -std::numeric_limits<double>::infinity();
    for (const auto& [t, v] : s) {
        excess = std::max(excess, std::max(v, floor) / (fit.A * std::exp(fit.B * t)) - 1.0);
    }
    fit.max_rel_excess = excess;
    return fit;
}

}  // namespace fbq
