#include "fbq/multipliers/operators.hpp"

#include <cmath>
#include <string>

#include "fbq/errors.hpp"

namespace fbq {

void require_alpha(double alpha) {
    if (!(alpha > 1.0 && alpha < 2.0)) {
        throw ConfigError("alpha must lie in (1, 2), got " + std::to_string(alpha));
    }
}

}  // namespace fbq

namespace fbq::symbols {
namespace {

using cplx = std::complex<double>;

double norm2(double x1, double x2) { return x1 * x1 + x2 * x2; }

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

}  // namespace

MultiplierSpec identity() {
    return MultiplierSpec("I", 0.0, [](double, double) { return cplx(1.0); });
}

MultiplierSpec fractional_laplacian(double a) {
    if (!(a >= 0.0)) throw ConfigError("fractional Laplacian power must be >= 0");
    return MultiplierSpec("Lambda^" + fmt(a), a, [a](double x1, double x2) {
        return cplx(std::pow(norm2(x1, x2), 0.5 * a));
    });
}

MultiplierSpec bessel_potential(double s) {
    return MultiplierSpec("tLambda^" + fmt(s), s, [s](double x1, double x2) {
        return cplx(std::pow(1.0 + norm2(x1, x2), 0.5 * s));
    });
}

MultiplierSpec derivative(Axis axis) {
    if (axis == Axis::X1) {
        return MultiplierSpec("d1", 1.0, [](double x1, double) { return cplx(0.0, x1); });
    }
    return MultiplierSpec("d2", 1.0, [](double, double x2) { return cplx(0.0, x2); });
}

MultiplierSpec s_operator(double alpha) {
    return MultiplierSpec("S", 1.0 - alpha, [alpha](double x1, double x2) {
        return cplx(0.0, x1 * std::pow(1.0 + norm2(x1, x2), -0.5 * alpha));
    });
}

MultiplierSpec sbar_operator(double alpha) {
    return MultiplierSpec("Sbar", 1.0 - alpha, [alpha](double x1, double x2) {
        const double r2 = norm2(x1, x2);
        return cplx(std::sqrt(r2) * std::pow(1.0 + r2, -0.5 * alpha));
    });
}

double n_symbol_real(double alpha, double xi1, double xi2) {
    const double r2 = norm2(xi1, xi2);
    if (r2 == 0.0) return 0.0;
    // |xi|^a / (1+|xi|^2)^(a/2) - 1 = expm1(-(a/2) log1p(1/|xi|^2)), free of
    // cancellation at large |xi|.
    return xi1 * std::expm1(-0.5 * alpha * std::log1p(1.0 / r2));
}

MultiplierSpec n_operator(double alpha) {
    return MultiplierSpec("N", -1.0, [alpha](double x1, double x2) {
        return cplx(0.0, n_symbol_real(alpha, x1, x2));
    });
}

MultiplierSpec m_tilde(double alpha) {
    return MultiplierSpec("m_tilde", 0.0, [alpha](double x1, double x2) {
        return cplx(0.0, std::sqrt(1.0 + norm2(x1, x2)) * n_symbol_real(alpha, x1, x2));
    });
}

MultiplierSpec riesz_bessel() {
    return MultiplierSpec("d1/tLambda", 0.0, [](double x1, double x2) {
        return cplx(0.0, x1 / std::sqrt(1.0 + norm2(x1, x2)));
    });
}

}  // namespace fbq::symbols

namespace fbq {

ScalarField fractional_laplacian(const ScalarField& f, double a) {
    return apply_multiplier(f, symbols::fractional_laplacian(a));
}

ScalarField s_operator(const ScalarField& f, double alpha) {
    require_alpha(alpha);
    return apply_multiplier(f, symbols::s_operator(alpha));
}

ScalarField sbar_operator(const ScalarField& f, double alpha) {
    require_alpha(alpha);
    return apply_multiplier(f, symbols::sbar_operator(alpha));
}

ScalarField n_operator(const ScalarField& f, double alpha) {
    require_alpha(alpha);
    return apply_multiplier(f, symbols::n_operator(alpha));
}

}  // namespace fbq
