#include "fbq/analysis/inequalities.hpp"

#include <cmath>

#include "fbq/analysis/commutators.hpp"
#include "fbq/errors.hpp"
#include "fbq/multipliers/operators.hpp"
#include "fbq/spectral/norms.hpp"

namespace fbq {
namespace {

ScalarField on_quadrature_grid(const ScalarField& f, bool oversample) {
    return oversample ? resample(f, 2 * f.grid().n()) : f;
}

ScalarField abs_power(const ScalarField& f, double power) {
    RealArray v = f.physical_values();
    for (double& x : v) x = std::pow(std::abs(x), power);
    return ScalarField::from_physical(f.grid(), std::move(v));
}

double ratio_or_zero(double lhs, double rhs, double lhs_scale) {
    if (lhs <= 1e-12 * lhs_scale) return 0.0;
    if (rhs == 0.0) return kInfinity;
    return lhs / rhs;
}

}  // namespace

CordobaResult cordoba_check(const ScalarField& theta, double p, double s, bool oversample) {
    if (!(p >= 2.0)) throw ConfigError("cordoba_check requires p >= 2");
    if (!(s > 0.0 && s < 2.0)) throw ConfigError("cordoba_check requires s in (0, 2)");
    const ScalarField th = on_quadrature_grid(theta, oversample);
    const RealArray v = th.physical_values();

    RealArray weight(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) weight[i] = std::pow(std::abs(v[i]), p - 2.0) * v[i];
    const ScalarField w = ScalarField::from_physical(th.grid(), std::move(weight));

    CordobaResult r;
    r.lhs = inner_product(w, fractional_laplacian(th, s));
    const double half = lq_norm(fractional_laplacian(abs_power(th, 0.5 * p), 0.5 * s), 2.0);
    r.rhs = (2.0 / p) * half * half;
    r.margin = r.lhs - r.rhs;
    return r;
}

GnExponents gn_exponents(double q, double r, double alpha) {
    return {(r * alpha - 2.0 * r + 2.0 * q) / (alpha * r), 4.0 * (r - q) / (alpha * r * q)};
}

double gn_ratio(const ScalarField& zeta, double q, double r, double alpha, bool oversample) {
    require_alpha(alpha);
    if (!(q > 1.0) || std::isinf(q)) throw ConfigError("gn_ratio requires q in (1, inf)");
    const double r_max = 2.0 * q / (2.0 - alpha);
    if (!(r >= q && r <= r_max)) {
        throw ConfigError("gn_ratio requires q <= r <= 2q/(2-alpha)");
    }
    const ScalarField z = on_quadrature_grid(zeta, oversample);
    const double lq = lq_norm(z, q);
    if (lq == 0.0) throw ConfigError("gn_ratio is undefined for a zero field");
    const GnExponents ex = gn_exponents(q, r, alpha);
    const double diss = lq_norm(fractional_laplacian(abs_power(z, 0.5 * q), 0.5 * alpha), 2.0);
    const double rhs = std::pow(lq, ex.a) * std::pow(diss, ex.b);
    return lq_norm(z, r) / rhs;
}

void validate_holder(const HolderExponents& e) {
    const double vals[] = {e.q1, e.q1t, e.q2, e.q2t};
    if (!(e.q > 1.0) || std::isinf(e.q)) throw ConfigError("Holder: q must lie in (1, inf)");
    for (double v : vals) {
        if (!(v >= e.q)) throw ConfigError("Holder: every exponent must be >= q");
    }
    if (std::isinf(e.q2)) throw ConfigError("Holder: q2 must be finite");
    const double inv = 1.0 / e.q;
    if (std::abs(1.0 / e.q1 + 1.0 / e.q1t - inv) > 1e-12 ||
        std::abs(1.0 / e.q2 + 1.0 / e.q2t - inv) > 1e-12) {
        throw ConfigError("Holder: 1/q must equal 1/q1 + 1/q1t = 1/q2 + 1/q2t");
    }
}

double kato_ponce_ratio(const ScalarField& g, const ScalarField& f, double s, Axis j,
                        const HolderExponents& e) {
    if (!(s > 0.0 && s < 1.0)) throw ConfigError("kato_ponce_ratio requires s in (0, 1)");
    validate_holder(e);
    const MultiplierSpec op = compose(symbols::fractional_laplacian(s), symbols::derivative(j));
    const double lhs = lq_norm(commutator(op, g, f), e.q);
    const double scale = lq_norm(apply_multiplier(dealiased_product(g, f), op), e.q) +
                         lq_norm(dealiased_product(g, apply_multiplier(f, op)), e.q);
    const double rhs = lq_norm(f, e.q1) * lq_norm(fractional_laplacian(g, 1.0 + s), e.q1t) +
                       lq_norm(fractional_laplacian(f, s), e.q2) *
                           lq_norm(fractional_laplacian(g, 1.0), e.q2t);
    return ratio_or_zero(lhs, rhs, scale);
}

double inhom_kp_ratio(const ScalarField& g, const ScalarField& f, double mu, Axis j, double alpha,
                      const HolderExponents& e) {
    require_alpha(alpha);
    if (!(mu >= 0.0 && mu <= alpha)) throw ConfigError("inhom_kp_ratio requires 0 <= mu <= alpha");
    validate_holder(e);
    const MultiplierSpec op = compose(
        compose(symbols::fractional_laplacian(mu), symbols::s_operator(alpha)), symbols::derivative(j));
    const MultiplierSpec sbar_mu =
        compose(symbols::fractional_laplacian(mu), symbols::sbar_operator(alpha));
    const MultiplierSpec sbar_mu1 =
        compose(symbols::fractional_laplacian(mu + 1.0), symbols::sbar_operator(alpha));

    const double lhs = lq_norm(commutator(op, g, f), e.q);
    const double scale = lq_norm(apply_multiplier(dealiased_product(g, f), op), e.q) +
                         lq_norm(dealiased_product(g, apply_multiplier(f, op)), e.q);
    const double rhs = lq_norm(magnitude(gradient(g)), e.q1) *
                           lq_norm(apply_multiplier(f, sbar_mu), e.q1t) +
                       lq_norm(apply_multiplier(g, sbar_mu1), e.q2) * lq_norm(f, e.q2t);
    return ratio_or_zero(lhs, rhs, scale);
}

}  // namespace fbq
