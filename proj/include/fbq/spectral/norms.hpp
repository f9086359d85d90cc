/// @file norms.hpp
/// @brief Quadrature-based Lebesgue and Bessel-potential Sobolev norms.
///
/// Integrals use the equispaced rectangle rule, which is spectrally accurate
/// for smooth periodic integrands and exact for trigonometric polynomials of
/// degree below n.
#pragma once

#include <limits>

#include "fbq/spectral/field.hpp"

namespace fbq {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct LqOptions {
    /// For q = infinity: take the grid maximum after 2x spectral oversampling.
    bool oversample_max = false;
};

/// (sum |f|^q * cell_area)^(1/q); q = infinity gives the grid maximum of |f|.
/// Throws ConfigError for q < 1 or NaN.
double lq_norm(const ScalarField& f, double q, LqOptions opts = {});

/// ||(I - Delta)^(s/2) f||_{L^q} for s >= 0 and q in (1, inf).
double sobolev_norm(const ScalarField& f, double s, double q);

/// Rectangle-rule integral of f over the torus.
double integral(const ScalarField& f);

/// Rectangle-rule integral of f * g.
double inner_product(const ScalarField& f, const ScalarField& g);

/// Applies the Bessel potential symbol (1 + |xi|^2)^(s/2) to a spectral array.
void apply_bessel_potential(const SpectralGrid& g, double s, ComplexArray& coeffs);

}  // namespace fbq
