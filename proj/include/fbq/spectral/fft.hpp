/// @file fft.hpp
/// @brief Real-to-complex 2D transforms on a SpectralGrid (FFTW backend).
///
/// Normalization: the forward transform is unscaled,
///   f^(k) = sum_x f(x) exp(-i k.x),
/// and the inverse divides by n^2. Plans are built once per grid size with
/// FFTW_ESTIMATE, so results are bitwise reproducible for a fixed build.
#pragma once

#include <complex>
#include <span>

#include "fbq/spectral/grid.hpp"

namespace fbq {

void forward_fft(const SpectralGrid& grid, std::span<const double> physical,
                 std::span<std::complex<double>> spectral);

/// The input is left untouched (FFTW's c2r overwrites, so a scratch copy is made).
void inverse_fft(const SpectralGrid& grid, std::span<const std::complex<double>> spectral,
                 std::span<double> physical);

}  // namespace fbq
