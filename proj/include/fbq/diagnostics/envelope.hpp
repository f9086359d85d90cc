/// @file envelope.hpp
/// @brief Exponential envelopes A e^{Bt} certified pointwise over a series.
#pragma once

#include <span>
#include <string>
#include <utility>

namespace fbq {

struct EnvelopeFit {
    std::string quantity;
    double A = 0.0;
    double B = 0.0;
    /// max over samples of value / (A e^{Bt}) - 1; <= 0 by construction.
    double max_rel_excess = 0.0;
    /// Every value was at or below the floor.
    bool degenerate = false;
};

/// Least-squares fit of log(max(value, floor)) against t gives B; A is then
/// the smallest amplitude with max(value, floor) <= A e^{Bt} at every sample
/// (nudged up by a few ulps so the bound also holds in floating point).
/// Throws ConfigError for an empty series or a negative or NaN value.
EnvelopeFit fit_envelope(std::span<const std::pair<double, double>> series, double floor = 1e-14,
                         std::string quantity = {});

}  // namespace fbq
