#include "fbq/spectral/spectral_ops.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>

#include "fbq/errors.hpp"

namespace fbq {

ScalarField partial_derivative(const ScalarField& f, Axis axis) {
    const SpectralGrid& g = f.grid();
    ComplexArray c = f.spectral_values();
    const int nyq = g.n() / 2;
    const double scale = g.wavenumber_scale();
    for_each_mode(g, [&](std::size_t idx, int k1, int k2) {
        const int k = axis == Axis::X1 ? k1 : k2;
        if (k == nyq) {
            c[idx] = 0.0;
        } else {
            c[idx] *= std::complex<double>(0.0, scale * k);
        }
    });
    return ScalarField::from_spectral(g, std::move(c));
}

void dealias_in_place(const SpectralGrid& g, ComplexArray& coeffs) {
    for_each_mode(g, [&](std::size_t idx, int k1, int k2) {
        if (!inside_dealias_band(g, k1, k2)) coeffs[idx] = 0.0;
    });
}

ScalarField dealias(const ScalarField& f) {
    ComplexArray c = f.spectral_values();
    dealias_in_place(f.grid(), c);
    return ScalarField::from_spectral(f.grid(), std::move(c));
}

VectorField gradient(const ScalarField& f) {
    const ScalarField spec = forward_transform(f);
    return VectorField(partial_derivative(spec, Axis::X1), partial_derivative(spec, Axis::X2));
}

ScalarField divergence(const VectorField& v) {
    return partial_derivative(v.x1, Axis::X1) + partial_derivative(v.x2, Axis::X2);
}

ScalarField curl(const VectorField& v) {
    return partial_derivative(v.x2, Axis::X1) - partial_derivative(v.x1, Axis::X2);
}

ScalarField resample(const ScalarField& f, int m) {
    const SpectralGrid& src = f.grid();
    const SpectralGrid dst(m, src.length());
    const int n = src.n();
    if (m == n) return f;
    const ComplexArray in = f.spectral_values();
    ComplexArray out(dst.spectral_size(), 0.0);
    const double scale = static_cast<double>(dst.physical_size()) / src.physical_size();
    const int dst_cols = dst.spectral_cols();

    auto row_of = [](int k, int size) { return k >= 0 ? k : k + size; };

    if (m > n) {
        const int nyq = n / 2;
        for_each_mode(src, [&](std::size_t idx, int k1, int k2) {
            std::complex<double> v = in[idx] * scale;
            if (k2 == nyq) v *= 0.5;  // the mirrored column -n/2 is implied
            auto put = [&](int kk1, std::complex<double> val) {
                out[static_cast<std::size_t>(row_of(kk1, m)) * dst_cols + k2] += val;
            };
            if (k1 == nyq) {
                put(nyq, 0.5 * v);
                put(-nyq, 0.5 * v);
            } else {
                put(k1, v);
            }
        });
    } else {
        const int lim = m / 2;
        for_each_mode(src, [&](std::size_t idx, int k1, int k2) {
            if (std::abs(k1) >= lim || k2 >= lim) return;
            out[static_cast<std::size_t>(row_of(k1, m)) * dst_cols + k2] = in[idx] * scale;
        });
    }
    return ScalarField::from_spectral(dst, std::move(out));
}

double spectral_energy(const SpectralGrid& g, const ComplexArray& coeffs) {
    double sum = 0.0;
    for_each_mode(g, [&](std::size_t idx, int, int k2) {
        sum += g.hermitian_weight(k2) * std::norm(coeffs[idx]);
    });
    return sum;
}

}  // namespace fbq
