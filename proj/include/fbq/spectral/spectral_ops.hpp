/// @file spectral_ops.hpp
/// @brief Spectral derivatives, 2/3-rule dealiasing, and lattice helpers.
#pragma once

#include "fbq/spectral/field.hpp"

namespace fbq {

enum class Axis { X1 = 1, X2 = 2 };

/// Visits every stored mode of the half-complex layout as
/// fn(index, k1, k2) with integer wavenumbers.
template <class Fn>
void for_each_mode(const SpectralGrid& g, Fn&& fn) {
    const int n = g.n();
    const int cols = g.spectral_cols();
    std::size_t idx = 0;
    for (int a = 0; a < n; ++a) {
        const int k1 = g.wrap(a);
        for (int b = 0; b < cols; ++b, ++idx) fn(idx, k1, b);
    }
}

/// True when the 2/3 rule keeps mode (k1, k2): max(|k1|, |k2|) <= n/3.
inline bool inside_dealias_band(const SpectralGrid& g, int k1, int k2) {
    const int m = k1 < 0 ? -k1 : k1;
    const int kmax = m > k2 ? m : k2;
    return 3 * kmax <= g.n();
}

/// Multiplies by i * xi_axis. Modes whose axis component sits on the Nyquist
/// wavenumber n/2 are zeroed (the odd symbol has no real-preserving value there).
ScalarField partial_derivative(const ScalarField& f, Axis axis);

/// Zeroes all modes outside the 2/3 band.
ScalarField dealias(const ScalarField& f);

/// In-place variants on raw half-complex arrays.
void dealias_in_place(const SpectralGrid& g, ComplexArray& coeffs);

VectorField gradient(const ScalarField& f);
ScalarField divergence(const VectorField& v);
/// curl v = d1 v2 - d2 v1.
ScalarField curl(const VectorField& v);

/// Spectral interpolation onto an m x m grid of the same length. Upsampling
/// is exact (Nyquist content is split symmetrically); downsampling truncates.
ScalarField resample(const ScalarField& f, int m);

/// Sum of |f^(k)|^2 over the full lattice (Hermitian weights applied).
double spectral_energy(const SpectralGrid& g, const ComplexArray& coeffs);

}  // namespace fbq
