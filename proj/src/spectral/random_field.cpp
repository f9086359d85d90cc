#include "fbq/spectral/random_field.hpp"

#include <cmath>
#include <random>

#include "fbq/errors.hpp"
#include "fbq/spectral/spectral_ops.hpp"

namespace fbq {

ScalarField random_field(const SpectralGrid& grid, const RandomFieldSpec& spec,
                         std::uint64_t seed) {
    const int K = spec.max_wavenumber;
    const int n = grid.n();
    if (K < 1 || 2 * K >= n) {
        throw ConfigError("random field band must satisfy 1 <= max_wavenumber < n/2");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);

    ComplexArray c(grid.spectral_size(), 0.0);
    const int cols = grid.spectral_cols();
    const double npts = static_cast<double>(grid.physical_size());
    auto slot = [&](int k1, int k2) -> std::complex<double>& {
        const int a = k1 >= 0 ? k1 : k1 + n;
        return c[static_cast<std::size_t>(a) * cols + k2];
    };

    // Upper half plane k2 > 0, plus k2 = 0 with k1 >= 0; conjugates fill the rest.
    for (int k2 = 0; k2 <= K; ++k2) {
        for (int k1 = -K; k1 <= K; ++k1) {
            if (k2 == 0 && k1 < 0) continue;
            const double re = normal(rng);
            const double im = normal(rng);
            const double weight =
                spec.amplitude * std::pow(1.0 + k1 * k1 + k2 * k2, -0.5 * spec.decay);
            std::complex<double> v;
            if (k1 == 0 && k2 == 0) {
                v = spec.zero_mean ? 0.0 : re * weight;
            } else {
                v = std::complex<double>(re, im) * (weight / std::sqrt(2.0));
            }
            slot(k1, k2) = v * npts;
            if (k2 == 0 && k1 > 0) slot(-k1, 0) = std::conj(v) * npts;
        }
    }
    return ScalarField::from_spectral(grid, std::move(c));
}

VectorField random_solenoidal_field(const SpectralGrid& grid, const RandomFieldSpec& spec,
                                    std::uint64_t seed) {
    const ScalarField psi = random_field(grid, spec, seed);
    return VectorField(-partial_derivative(psi, Axis::X2), partial_derivative(psi, Axis::X1));
}

}  // namespace fbq
