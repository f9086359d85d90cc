#include "fbq/multipliers/multiplier.hpp"

#include <cmath>
#include <numbers>

#include "fbq/errors.hpp"
#include "fbq/spectral/spectral_ops.hpp"

namespace fbq {

MultiplierSpec::MultiplierSpec(std::string name, double order, Symbol symbol)
    : name_(std::move(name)), order_(order), symbol_(std::move(symbol)) {
    const std::complex<double> at_zero = symbol_(0.0, 0.0);
    if (!std::isfinite(at_zero.real()) || !std::isfinite(at_zero.imag())) {
        throw ConfigError("multiplier '" + name_ + "' is not finite at xi = 0");
    }
}

MultiplierSpec compose(const MultiplierSpec& a, const MultiplierSpec& b) {
    return MultiplierSpec(a.name() + "*" + b.name(), a.order() + b.order(),
                          [a, b](double x1, double x2) { return a(x1, x2) * b(x1, x2); });
}

double measured_order_bound(const MultiplierSpec& m) {
    constexpr int kRadii = 61;
    constexpr int kAngles = 24;
    double sup = 0.0;
    for (int r = 0; r < kRadii; ++r) {
        const double rad = std::pow(10.0, 3.0 * r / (kRadii - 1));
        for (int a = 0; a < kAngles; ++a) {
            const double th = 2.0 * std::numbers::pi * (a + 0.5) / kAngles;
            const double v = std::abs(m(rad * std::cos(th), rad * std::sin(th)));
            sup = std::max(sup, v / std::pow(rad, m.order()));
        }
    }
    return sup;
}

LatticeSymbol::LatticeSymbol(const SpectralGrid& grid, const MultiplierSpec& m)
    : grid_(grid), values_(grid.spectral_size()) {
    const int n = grid.n();
    const double sc = grid.wavenumber_scale();
    for_each_mode(grid, [&](std::size_t idx, int k1, int k2) {
        // Negated wavevector, wrapped back onto the lattice.
        const int m1 = grid.wrap((n - k1) % n);
        const int m2 = grid.wrap((n - k2) % n);
        const std::complex<double> here = m(sc * k1, sc * k2);
        const std::complex<double> mirror = m(sc * m1, sc * m2);
        if (!std::isfinite(here.real()) || !std::isfinite(here.imag()) ||
            !std::isfinite(mirror.real()) || !std::isfinite(mirror.imag())) {
            throw NumericalError("multiplier '" + m.name() + "' is not finite at lattice point (" +
                                 std::to_string(k1) + ", " + std::to_string(k2) + ")");
        }
        values_[idx] = 0.5 * (here + std::conj(mirror));
    });
}

void LatticeSymbol::apply(ComplexArray& coeffs) const {
    if (coeffs.size() != values_.size()) throw ConfigError("array size does not match symbol");
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] *= values_[i];
}

ScalarField apply_multiplier(const ScalarField& f, const LatticeSymbol& m) {
    if (!(f.grid() == m.grid())) throw ConfigError("symbol built for a different grid");
    ComplexArray c = f.spectral_values();
    m.apply(c);
    return ScalarField::from_spectral(f.grid(), std::move(c));
}

ScalarField apply_multiplier(const ScalarField& f, const MultiplierSpec& m) {
    return apply_multiplier(f, LatticeSymbol(f.grid(), m));
}

}  // namespace fbq
