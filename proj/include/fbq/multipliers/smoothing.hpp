/// @file smoothing.hpp
/// @brief Empirical L^q smoothing ratio of the operator N.
#pragma once

#include <cstdint>
#include <vector>

#include "fbq/spectral/random_field.hpp"

namespace fbq {

/// (||N f||_q + || |grad N f| ||_q) / ||f||_q, with 0/0 reported as 0.
double n_smoothing_ratio_of(const ScalarField& f, double alpha, double q);

struct SmoothingResult {
    double max_ratio = 0.0;
    std::uint64_t worst_seed = 0;
    std::vector<double> ratios;  // one per trial, in seed order
};

/// Trial t uses random_field(grid, spec, seed + t).
SmoothingResult n_smoothing_ratio(double alpha, double q, int trials, std::uint64_t seed,
                                  const SpectralGrid& grid, const RandomFieldSpec& spec = {});

}  // namespace fbq
