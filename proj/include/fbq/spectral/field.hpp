/// @file field.hpp
/// @brief Real scalar and vector fields on a SpectralGrid.
///
/// A ScalarField carries a physical array, a half-complex spectral array, or
/// both. Values are immutable once constructed; transforms return new fields.
#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "fbq/spectral/grid.hpp"

namespace fbq {

using RealArray = std::vector<double>;
using ComplexArray = std::vector<std::complex<double>>;

class ScalarField {
public:
    static ScalarField from_physical(const SpectralGrid& grid, RealArray values);
    static ScalarField from_spectral(const SpectralGrid& grid, ComplexArray coeffs);
    static ScalarField zeros(const SpectralGrid& grid);
    static ScalarField constant(const SpectralGrid& grid, double c);
    /// Samples f(x1, x2) at the grid nodes.
    static ScalarField sample(const SpectralGrid& grid,
                              const std::function<double(double, double)>& f);

    const SpectralGrid& grid() const noexcept { return grid_; }
    bool has_physical() const noexcept { return physical_.has_value(); }
    bool has_spectral() const noexcept { return spectral_.has_value(); }

    /// Throw std::logic_error when the representation is absent.
    const RealArray& physical() const;
    const ComplexArray& spectral() const;

    /// Physical values, transforming when only the spectral form is stored.
    RealArray physical_values() const;
    /// Spectral coefficients, transforming when only the physical form is stored.
    ComplexArray spectral_values() const;

    /// Mean over the torus, read from the zero mode or by quadrature.
    double mean() const;

private:
    ScalarField(SpectralGrid grid, std::optional<RealArray> phys, std::optional<ComplexArray> spec);

    SpectralGrid grid_;
    std::optional<RealArray> physical_;
    std::optional<ComplexArray> spectral_;

    friend ScalarField forward_transform(const ScalarField& f);
    friend ScalarField inverse_transform(const ScalarField& f);
};

/// Returns f with the spectral representation filled (physical kept if present).
ScalarField forward_transform(const ScalarField& f);
/// Returns f with the physical representation filled (spectral kept if present).
ScalarField inverse_transform(const ScalarField& f);

// Linear combinations act on whichever representations both operands share,
// falling back to spectral.
ScalarField operator+(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a, const ScalarField& b);
ScalarField operator*(double c, const ScalarField& a);
ScalarField operator-(const ScalarField& a);

/// Pointwise product in physical space, no dealiasing.
ScalarField pointwise_product(const ScalarField& a, const ScalarField& b);

struct VectorField {
    VectorField(ScalarField c1, ScalarField c2);

    const SpectralGrid& grid() const noexcept { return x1.grid(); }

    ScalarField x1;
    ScalarField x2;
};

/// Pointwise Euclidean magnitude |v|.
ScalarField magnitude(const VectorField& v);

}  // namespace fbq
