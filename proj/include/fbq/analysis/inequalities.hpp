/// @file inequalities.hpp
/// @brief Single-trial evaluations of the functional inequalities used in the
/// L^q and Sobolev persistence estimates.
///
/// Nonlinear powers such as |theta|^(p/2) are taken pointwise in physical
/// space (optionally on a 2x oversampled grid) without dealiasing, so those
/// integrals are quadrature approximations.
#pragma once

#include "fbq/spectral/field.hpp"
#include "fbq/spectral/spectral_ops.hpp"

namespace fbq {

struct CordobaResult {
    double lhs = 0.0;     // int |theta|^(p-2) theta Lambda^s theta
    double rhs = 0.0;     // (2/p) int (Lambda^(s/2) |theta|^(p/2))^2
    double margin = 0.0;  // lhs - rhs, expected >= 0
};

/// Requires p >= 2 and s in (0, 2).
CordobaResult cordoba_check(const ScalarField& theta, double p, double s, bool oversample = false);

/// Exponents of the fractional Gagliardo-Nirenberg bound
///   ||z||_r <= C ||z||_q^a ||Lambda^(alpha/2) |z|^(q/2)||_2^b,
/// a = (r alpha - 2r + 2q) / (alpha r),  b = 4 (r - q) / (alpha r q).
struct GnExponents {
    double a;
    double b;
};
GnExponents gn_exponents(double q, double r, double alpha);

/// LHS / RHS of the bound above. Requires q <= r <= 2q/(2 - alpha) and z != 0.
double gn_ratio(const ScalarField& zeta, double q, double r, double alpha, bool oversample = false);

/// Holder exponents with 1/q = 1/q1 + 1/q1t = 1/q2 + 1/q2t; infinity allowed
/// except for q2.
struct HolderExponents {
    double q = 4.0;
    double q1 = 8.0;
    double q1t = 8.0;
    double q2 = 8.0;
    double q2t = 8.0;
};

/// ||[Lambda^s d_j, g] f||_q / (||f||_q1 ||Lambda^(1+s) g||_q1t + ||Lambda^s f||_q2 ||Lambda g||_q2t)
/// for s in (0, 1). A numerically vanishing commutator reports 0.
double kato_ponce_ratio(const ScalarField& g, const ScalarField& f, double s, Axis j,
                        const HolderExponents& e);

/// ||[Lambda^mu S d_j, g] f||_q /
///   (|| |grad g| ||_r1 ||Lambda^mu Sbar f||_r1t + ||Lambda^(mu+1) Sbar g||_r2 ||f||_r2t)
/// for 0 <= mu <= alpha (exponents reuse HolderExponents: q1 = r1, ...).
double inhom_kp_ratio(const ScalarField& g, const ScalarField& f, double mu, Axis j, double alpha,
                      const HolderExponents& e);

/// Throws ConfigError unless the exponents satisfy the Holder relation.
void validate_holder(const HolderExponents& e);

}  // namespace fbq
