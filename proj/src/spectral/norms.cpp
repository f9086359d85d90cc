#include "fbq/spectral/norms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fbq/errors.hpp"
#include "fbq/spectral/spectral_ops.hpp"

namespace fbq {

double lq_norm(const ScalarField& f, double q, LqOptions opts) {
    if (std::isnan(q) || q < 1.0) {
        throw ConfigError("lq_norm requires q >= 1, got " + std::to_string(q));
    }
    if (std::isinf(q)) {
        const RealArray v =
            opts.oversample_max ? resample(f, 2 * f.grid().n()).physical_values()
                                : f.physical_values();
        double m = 0.0;
        for (double x : v) m = std::max(m, std::abs(x));
        return m;
    }
    const RealArray v = f.physical_values();
    double sum = 0.0;
    if (q == 2.0) {
        for (double x : v) sum += x * x;
    } else {
        for (double x : v) sum += std::pow(std::abs(x), q);
    }
    return std::pow(sum * f.grid().cell_area(), 1.0 / q);
}

void apply_bessel_potential(const SpectralGrid& g, double s, ComplexArray& coeffs) {
    if (s == 0.0) return;
    const double sc = g.wavenumber_scale();
    for_each_mode(g, [&](std::size_t idx, int k1, int k2) {
        const double xi2 = sc * sc * (static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2);
        coeffs[idx] *= std::pow(1.0 + xi2, 0.5 * s);
    });
}

double sobolev_norm(const ScalarField& f, double s, double q) {
    if (!(s >= 0.0)) throw ConfigError("sobolev_norm requires s >= 0");
    if (!(q > 1.0) || std::isinf(q)) throw ConfigError("sobolev_norm requires q in (1, inf)");
    if (s == 0.0) return lq_norm(f, q);
    ComplexArray c = f.spectral_values();
    apply_bessel_potential(f.grid(), s, c);
    return lq_norm(ScalarField::from_spectral(f.grid(), std::move(c)), q);
}

double integral(const ScalarField& f) {
    const RealArray v = f.physical_values();
    double sum = 0.0;
    for (double x : v) sum += x;
    return sum * f.grid().cell_area();
}

double inner_product(const ScalarField& f, const ScalarField& g) {
    const RealArray a = f.physical_values();
    const RealArray b = g.physical_values();
    if (a.size() != b.size()) throw ConfigError("fields live on different grids");
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum * f.grid().cell_area();
}

}  // namespace fbq
