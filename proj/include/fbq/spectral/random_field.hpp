/// @file random_field.hpp
/// @brief Seeded band-limited random fields.
///
/// Coefficients are drawn in a fixed order over the half lattice
/// |k1|, |k2| <= max_wavenumber, independent of the grid size. The same seed
/// therefore yields the same trigonometric polynomial on every grid with
/// n/2 > max_wavenumber, which is what refinement studies rely on.
#pragma once

#include <cstdint>

#include "fbq/spectral/field.hpp"

namespace fbq {

struct RandomFieldSpec {
    /// Spectral decay exponent gamma: |f^(k)| ~ (1 + |k|^2)^(-gamma/2).
    double decay = 2.0;
    /// Largest |k1| or |k2| carrying energy.
    int max_wavenumber = 8;
    bool zero_mean = true;
    /// Multiplies every coefficient.
    double amplitude = 1.0;
};

/// Throws ConfigError if the band does not fit strictly below the grid's Nyquist.
ScalarField random_field(const SpectralGrid& grid, const RandomFieldSpec& spec,
                         std::uint64_t seed);

/// Divergence-free field u = grad^perp psi = (-d2 psi, d1 psi) of a random
/// stream function psi.
VectorField random_solenoidal_field(const SpectralGrid& grid, const RandomFieldSpec& spec,
                                    std::uint64_t seed);

}  // namespace fbq
