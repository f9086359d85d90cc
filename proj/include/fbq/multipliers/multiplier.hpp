/// @file multiplier.hpp
/// @brief Fourier multipliers: symbol specifications and their lattice realization.
///
/// A MultiplierSpec is a symbol xi -> sigma(xi) on continuous wavevectors with
/// a declared growth order. Odd symbols carry their factor i explicitly, so the
/// symbol of d/dx1 is i*xi1 and the symbol of N is i*m(xi).
///
/// On the lattice the symbol is Hermitian-projected,
///   sigma_lat(k) = (sigma(xi(k)) + conj(sigma(xi(-k mod n)))) / 2,
/// which leaves Hermitian symbols untouched away from the Nyquist row and
/// column, zeroes odd symbols on the Nyquist wavenumber, and guarantees that
/// real input produces real output.
#pragma once

#include <complex>
#include <functional>
#include <string>

#include "fbq/spectral/field.hpp"

namespace fbq {

using Symbol = std::function<std::complex<double>(double xi1, double xi2)>;

class MultiplierSpec {
public:
    /// Throws ConfigError if the symbol is not finite at xi = 0.
    MultiplierSpec(std::string name, double order, Symbol symbol);

    const std::string& name() const noexcept { return name_; }
    double order() const noexcept { return order_; }
    std::complex<double> operator()(double xi1, double xi2) const { return symbol_(xi1, xi2); }

private:
    std::string name_;
    double order_;
    Symbol symbol_;
};

/// Product symbol a*b with order a.order + b.order (operator composition).
MultiplierSpec compose(const MultiplierSpec& a, const MultiplierSpec& b);

/// Sup of |sigma(xi)| / |xi|^order over a log-spaced radial x angular sample of
/// |xi| in [1, 1e3]. Bounded values confirm the declared order.
double measured_order_bound(const MultiplierSpec& m);

/// A symbol evaluated on every stored mode of a grid.
class LatticeSymbol {
public:
    /// Throws NumericalError naming the first lattice point where the symbol
    /// is not finite.
    LatticeSymbol(const SpectralGrid& grid, const MultiplierSpec& m);

    const SpectralGrid& grid() const noexcept { return grid_; }
    const ComplexArray& values() const noexcept { return values_; }
    void apply(ComplexArray& coeffs) const;

private:
    SpectralGrid grid_;
    ComplexArray values_;
};

ScalarField apply_multiplier(const ScalarField& f, const MultiplierSpec& m);
ScalarField apply_multiplier(const ScalarField& f, const LatticeSymbol& m);

}  // namespace fbq
