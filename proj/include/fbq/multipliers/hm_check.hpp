/// @file hm_check.hpp
/// @brief Numerical Hormander-Mikhlin decay certificate for a symbol.
///
/// For every multi-index beta with |beta| <= max_order the checker reports
///   sup_xi |xi|^|beta| |d^beta sigma(xi)|
/// over a log-spaced radial x angular sample of |xi| in [1e-3, 1e3]. Derivatives
/// are central finite differences with step h = 1e-4 * max(|xi|, 1).
#pragma once

#include <vector>

#include "fbq/multipliers/multiplier.hpp"

namespace fbq {

struct HmEntry {
    int beta1 = 0;
    int beta2 = 0;
    double sup = 0.0;
    double xi1_at_sup = 0.0;
    double xi2_at_sup = 0.0;
};

struct HmFailure {
    int beta1 = 0;
    int beta2 = 0;
    double xi1 = 0.0;
    double xi2 = 0.0;
};

struct HmDecayReport {
    std::string symbol;
    int samples = 0;
    std::vector<HmEntry> entries;
    std::vector<HmFailure> failures;

    bool all_finite() const noexcept { return failures.empty(); }
};

struct HmSampling {
    double min_radius = 1e-3;
    double max_radius = 1e3;
    int radii = 121;
    int angles = 32;
};

/// max_order must be 0, 1 or 2.
HmDecayReport hm_decay_check(const MultiplierSpec& m, int max_order, HmSampling sampling = {});

}  // namespace fbq
