#include "fbq/spectral/field.hpp"

#include <cmath>
#include <stdexcept>

#include "fbq/errors.hpp"
#include "fbq/spectral/fft.hpp"

namespace fbq {

ScalarField::ScalarField(SpectralGrid grid, std::optional<RealArray> phys,
                         std::optional<ComplexArray> spec)
    : grid_(grid), physical_(std::move(phys)), spectral_(std::move(spec)) {}

ScalarField ScalarField::from_physical(const SpectralGrid& grid, RealArray values) {
    if (values.size() != grid.physical_size()) {
        throw ConfigError("physical array size does not match grid");
    }
    return ScalarField(grid, std::move(values), std::nullopt);
}

ScalarField ScalarField::from_spectral(const SpectralGrid& grid, ComplexArray coeffs) {
    if (coeffs.size() != grid.spectral_size()) {
        throw ConfigError("spectral array size does not match grid");
    }
    return ScalarField(grid, std::nullopt, std::move(coeffs));
}

ScalarField ScalarField::zeros(const SpectralGrid& grid) {
    return ScalarField(grid, RealArray(grid.physical_size(), 0.0),
                       ComplexArray(grid.spectral_size(), 0.0));
}

ScalarField ScalarField::constant(const SpectralGrid& grid, double c) {
    ComplexArray spec(grid.spectral_size(), 0.0);
    spec[0] = c * static_cast<double>(grid.physical_size());
    return ScalarField(grid, RealArray(grid.physical_size(), c), std::move(spec));
}

ScalarField ScalarField::sample(const SpectralGrid& grid,
                                const std::function<double(double, double)>& f) {
    const int n = grid.n();
    RealArray v(grid.physical_size());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            v[static_cast<std::size_t>(i) * n + j] = f(grid.coordinate(i), grid.coordinate(j));
        }
    }
    return from_physical(grid, std::move(v));
}

const RealArray& ScalarField::physical() const {
    if (!physical_) throw std::logic_error("field has no physical representation");
    return *physical_;
}

const ComplexArray& ScalarField::spectral() const {
    if (!spectral_) throw std::logic_error("field has no spectral representation");
    return *spectral_;
}

RealArray ScalarField::physical_values() const {
    if (physical_) return *physical_;
    RealArray out(grid_.physical_size());
    inverse_fft(grid_, *spectral_, out);
    return out;
}

ComplexArray ScalarField::spectral_values() const {
    if (spectral_) return *spectral_;
    ComplexArray out(grid_.spectral_size());
    forward_fft(grid_, *physical_, out);
    return out;
}

double ScalarField::mean() const {
    if (spectral_) return (*spectral_)[0].real() / static_cast<double>(grid_.physical_size());
    double sum = 0.0;
    for (double v : *physical_) sum += v;
    return sum / static_cast<double>(grid_.physical_size());
}

ScalarField forward_transform(const ScalarField& f) {
    if (f.spectral_) return f;
    return ScalarField(f.grid_, f.physical_, f.spectral_values());
}

ScalarField inverse_transform(const ScalarField& f) {
    if (f.physical_) return f;
    return ScalarField(f.grid_, f.physical_values(), f.spectral_);
}

namespace {

void require_same_grid(const ScalarField& a, const ScalarField& b) {
    if (!(a.grid() == b.grid())) throw ConfigError("fields live on different grids");
}

template <class Op>
ScalarField combine(const ScalarField& a, const ScalarField& b, Op op) {
    require_same_grid(a, b);
    if (a.has_physical() && b.has_physical() && !(a.has_spectral() && b.has_spectral())) {
        RealArray out(a.physical());
        const RealArray& bv = b.physical();
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(out[i], bv[i]);
        return ScalarField::from_physical(a.grid(), std::move(out));
    }
    ComplexArray out = a.spectral_values();
    const ComplexArray bv = b.spectral_values();
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(out[i], bv[i]);
    return ScalarField::from_spectral(a.grid(), std::move(out));
}

}  // namespace

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
    return combine(a, b, [](auto x, auto y) { return x + y; });
}

ScalarField operator-(const ScalarField& a, const ScalarField& b) {
    return combine(a, b, [](auto x, auto y) { return x - y; });
}

ScalarField operator*(double c, const ScalarField& a) {
    if (a.has_spectral()) {
        ComplexArray out(a.spectral());
        for (auto& v : out) v *= c;
        return ScalarField::from_spectral(a.grid(), std::move(out));
    }
    RealArray out(a.physical());
    for (auto& v : out) v *= c;
    return ScalarField::from_physical(a.grid(), std::move(out));
}

ScalarField operator-(const ScalarField& a) { return -1.0 * a; }

ScalarField pointwise_product(const ScalarField& a, const ScalarField& b) {
    require_same_grid(a, b);
    RealArray out = a.physical_values();
    const RealArray bv = b.physical_values();
    for (std::size_t i = 0; i < out.size(); ++i) out[i] *= bv[i];
    return ScalarField::from_physical(a.grid(), std::move(out));
}

VectorField::VectorField(ScalarField c1, ScalarField c2) : x1(std::move(c1)), x2(std::move(c2)) {
    require_same_grid(x1, x2);
}

ScalarField magnitude(const VectorField& v) {
    RealArray a = v.x1.physical_values();
    const RealArray b = v.x2.physical_values();
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = std::hypot(a[i], b[i]);
    return ScalarField::from_physical(v.grid(), std::move(a));
}

}  // namespace fbq
