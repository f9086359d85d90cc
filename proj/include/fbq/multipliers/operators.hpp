/// @file operators.hpp
/// @brief The concrete multipliers of the fractional Boussinesq system.
///
///   Lambda^a          |xi|^a                              (fractional Laplacian)
///   tilde Lambda^s    (1 + |xi|^2)^(s/2)                  (Bessel potential)
///   S                 i xi1 (1 + |xi|^2)^(-alpha/2)       = d1 (I - Delta)^(-alpha/2)
///   S-bar             |xi| (1 + |xi|^2)^(-alpha/2)
///   N                 i m(xi),  m = |xi|^alpha xi1 / (1 + |xi|^2)^(alpha/2) - xi1
///   m-tilde           i (1 + |xi|^2)^(1/2) m(xi)             = tilde Lambda N
///
/// Every symbol here is Hermitian (sigma(-xi) = conj sigma(xi)), so the odd
/// ones carry their factor i.
#pragma once

#include "fbq/multipliers/multiplier.hpp"
#include "fbq/spectral/spectral_ops.hpp"

namespace fbq::symbols {

MultiplierSpec identity();
/// Requires a >= 0; negative homogeneous powers are singular at xi = 0.
MultiplierSpec fractional_laplacian(double a);
MultiplierSpec bessel_potential(double s);
MultiplierSpec derivative(Axis axis);
MultiplierSpec s_operator(double alpha);
MultiplierSpec sbar_operator(double alpha);
MultiplierSpec n_operator(double alpha);
MultiplierSpec m_tilde(double alpha);
/// i xi1 / (1 + |xi|^2)^(1/2), a zero-order Riesz-type symbol.
MultiplierSpec riesz_bessel();

/// The real symbol m(xi) of N (without the factor i).
double n_symbol_real(double alpha, double xi1, double xi2);

}  // namespace fbq::symbols

namespace fbq {

/// Throws ConfigError unless alpha lies in (1, 2).
void require_alpha(double alpha);

ScalarField fractional_laplacian(const ScalarField& f, double a);
ScalarField s_operator(const ScalarField& f, double alpha);
ScalarField sbar_operator(const ScalarField& f, double alpha);
ScalarField n_operator(const ScalarField& f, double alpha);

}  // namespace fbq
