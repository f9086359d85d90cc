/// @file commutators.hpp
/// @brief Dealiased advection and multiplier commutators.
///
/// Every pointwise product below is dealiased with the 2/3 rule. For inputs
/// inside the dealiased band the retained modes of each product are exact,
/// so algebraic identities between commutators hold to roundoff.
#pragma once

#include "fbq/multipliers/multiplier.hpp"

namespace fbq {

/// Dealiased product D(a * b).
ScalarField dealiased_product(const ScalarField& a, const ScalarField& b);

/// D(u . grad f).
ScalarField advection(const VectorField& u, const ScalarField& f);

/// [T, g] f = T D(g f) - D(g T f).
ScalarField commutator(const MultiplierSpec& t, const ScalarField& g, const ScalarField& f);

/// Throws ConfigError when ||D(div u)||_2 exceeds 1e-10 * max(1, ||u1||_2 + ||u2||_2).
void require_divergence_free(const VectorField& u);

/// [S, u.grad] rho = S D(u.grad rho) - D(u.grad S rho).
ScalarField commutator_s_advection(const VectorField& u, const ScalarField& rho, double alpha);

/// Relative L^2 residual of the splitting identity
///   T([S, u.grad] rho) = [T S d_j, u_j] rho - [T d_j, u_j] S rho   (sum over j)
/// for an arbitrary multiplier T; 0/0 is reported as 0.
double commutator_identity_residual(const VectorField& u, const ScalarField& rho,
                                    const MultiplierSpec& t, double alpha);

/// The identity with T = Lambda^(s-1); requires s >= 1.
double commutator_identity_residual(const VectorField& u, const ScalarField& rho, double s,
                                    double alpha);

}  // namespace fbq
