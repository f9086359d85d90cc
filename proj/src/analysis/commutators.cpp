#include "fbq/analysis/commutators.hpp"

#include "fbq/errors.hpp"
#include "fbq/multipliers/operators.hpp"
#include "fbq/spectral/norms.hpp"
#include "fbq/spectral/spectral_ops.hpp"

namespace fbq {

ScalarField dealiased_product(const ScalarField& a, const ScalarField& b) {
    return dealias(pointwise_product(a, b));
}

ScalarField advection(const VectorField& u, const ScalarField& f) {
    const ScalarField fs = forward_transform(f);
    const RealArray u1 = u.x1.physical_values();
    const RealArray u2 = u.x2.physical_values();
    RealArray d1 = partial_derivative(fs, Axis::X1).physical_values();
    const RealArray d2 = partial_derivative(fs, Axis::X2).physical_values();
    for (std::size_t i = 0; i < d1.size(); ++i) d1[i] = u1[i] * d1[i] + u2[i] * d2[i];
    return dealias(ScalarField::from_physical(f.grid(), std::move(d1)));
}

ScalarField commutator(const MultiplierSpec& t, const ScalarField& g, const ScalarField& f) {
    const LatticeSymbol sym(f.grid(), t);
    return apply_multiplier(dealiased_product(g, f), sym) -
           dealiased_product(g, apply_multiplier(f, sym));
}

void require_divergence_free(const VectorField& u) {
    const double div = lq_norm(dealias(divergence(u)), 2.0);
    const double scale = std::max(1.0, lq_norm(u.x1, 2.0) + lq_norm(u.x2, 2.0));
    if (div > 1e-10 * scale) {
        throw ConfigError("velocity is not divergence-free: ||div u||_2 = " + std::to_string(div));
    }
}

ScalarField commutator_s_advection(const VectorField& u, const ScalarField& rho, double alpha) {
    require_alpha(alpha);
    require_divergence_free(u);
    const LatticeSymbol s(rho.grid(), symbols::s_operator(alpha));
    return apply_multiplier(advection(u, rho), s) - advection(u, apply_multiplier(rho, s));
}

double commutator_identity_residual(const VectorField& u, const ScalarField& rho,
                                    const MultiplierSpec& t, double alpha) {
    const ScalarField lhs = apply_multiplier(commutator_s_advection(u, rho, alpha), t);
    const MultiplierSpec s = symbols::s_operator(alpha);
    const ScalarField s_rho = apply_multiplier(rho, s);

    ScalarField rhs = ScalarField::zeros(rho.grid());
    const ScalarField* comps[2] = {&u.x1, &u.x2};
    const Axis axes[2] = {Axis::X1, Axis::X2};
    for (int j = 0; j < 2; ++j) {
        const MultiplierSpec dj = symbols::derivative(axes[j]);
        rhs = rhs + commutator(compose(compose(t, s), dj), *comps[j], rho) -
              commutator(compose(t, dj), *comps[j], s_rho);
    }
    const double num = lq_norm(lhs - rhs, 2.0);
    const double den = lq_norm(lhs, 2.0);
    if (den == 0.0) return num == 0.0 ? 0.0 : kInfinity;
    return num / den;
}

double commutator_identity_residual(const VectorField& u, const ScalarField& rho, double s,
                                    double alpha) {
    if (!(s >= 1.0)) throw ConfigError("identity residual needs s >= 1 (Lambda^(s-1))");
    return commutator_identity_residual(u, rho, symbols::fractional_laplacian(s - 1.0), alpha);
}

}  // namespace fbq
