/// @file grid.hpp
/// @brief Periodic N x N grid on the torus [0, L)^2 and its wavenumber lattice.
///
/// Layout conventions used everywhere in the library:
///
///   physical  index p = i * n + j,  x1 = i * h, x2 = j * h     (row-major, i <-> x1)
///   spectral  index s = a * (n/2+1) + b,  k1 = wrap(a), k2 = b  (half-complex, FFTW r2c)
///
/// with wrap(a) = a for a <= n/2 and a - n otherwise, so k1 ranges over
/// {-n/2+1, ..., n/2}. The physical wavevector is xi = (2 pi / L) * k.
#pragma once

#include <cstddef>
#include <numbers>

namespace fbq {

class SpectralGrid {
public:
    /// Throws ConfigError unless n is even and >= 8 and length > 0.
    explicit SpectralGrid(int n, double length = 2.0 * std::numbers::pi);

    int n() const noexcept { return n_; }
    double length() const noexcept { return length_; }
    double spacing() const noexcept { return length_ / n_; }
    double cell_area() const noexcept { return spacing() * spacing(); }
    double area() const noexcept { return length_ * length_; }

    /// Number of stored k2 columns in the half-complex layout.
    int spectral_cols() const noexcept { return n_ / 2 + 1; }
    std::size_t physical_size() const noexcept { return static_cast<std::size_t>(n_) * n_; }
    std::size_t spectral_size() const noexcept {
        return static_cast<std::size_t>(n_) * spectral_cols();
    }

    /// Integer wavenumber of row index a (the k1 axis).
    int wrap(int a) const noexcept { return a <= n_ / 2 ? a : a - n_; }
    /// Scale factor 2 pi / L turning integer wavenumbers into xi.
    double wavenumber_scale() const noexcept { return 2.0 * std::numbers::pi / length_; }
    double coordinate(int i) const noexcept { return i * spacing(); }

    /// 1 for the self-conjugate columns b = 0 and b = n/2, 2 otherwise. Sums of
    /// |f^|^2 over the half layout must use this weight to cover the full lattice.
    double hermitian_weight(int b) const noexcept {
        return (b == 0 || b == n_ / 2) ? 1.0 : 2.0;
    }

    bool operator==(const SpectralGrid&) const = default;

private:
    int n_;
    double length_;
};

}  // namespace fbq
