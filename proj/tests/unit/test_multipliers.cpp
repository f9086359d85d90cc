#include <gtest/gtest.h>

#include "fbq/errors.hpp"
#include "fbq/multipliers/hm_check.hpp"
#include "fbq/multipliers/operators.hpp"
#include "fbq/multipliers/smoothing.hpp"
#include "fbq/spectral/norms.hpp"
#include "fbq/spectral/random_field.hpp"
#include "fbq/spectral/spectral_ops.hpp"
#include "oracles.hpp"

using namespace fbq;
using namespace fbq::testing;

namespace {

const auto cos1 = [](double x1, double) { return std::cos(x1); };
const auto sin1 = [](double x1, double) { return std::sin(x1); };

}  // namespace

TEST(Multiplier, FractionalLaplacianOnModes) {
    const SpectralGrid g(16);
    for (double a : {0.3, 1.0, 1.7}) {
        EXPECT_LT(max_abs_diff(fractional_laplacian(sampled(g, cos1), a), sampled(g, cos1)), 1e-13);
    }
    const ScalarField c2 = sampled(g, [](double x1, double) { return std::cos(2 * x1); });
    const ScalarField out = fractional_laplacian(c2, 1.5);
    EXPECT_LT(max_abs_diff(out, 2.828427124746190 * c2), 1e-12);
    // Direct DFT cross-check of the (2, 0) coefficient.
    const auto coeff = direct_dft(g, out.physical_values(), 2, 0);
    EXPECT_NEAR(coeff.real() / 128.0, std::pow(2.0, 1.5), 1e-12);
    EXPECT_LT(max_abs(fractional_laplacian(ScalarField::constant(g, 4.0), 1.5).physical_values()), 1e-14);
}

TEST(Multiplier, SOperator) {
    const SpectralGrid g(16);
    const double c = std::pow(2.0, -0.75);
    EXPECT_NEAR(c, 0.594604, 1e-6);
    EXPECT_LT(max_abs_diff(s_operator(sampled(g, cos1), 1.5), -c * sampled(g, sin1)), 1e-13);
    EXPECT_LT(max_abs(s_operator(ScalarField::constant(g, 2.0), 1.5).physical_values()), 1e-15);
    const ScalarField cos2 = sampled(g, [](double, double x2) { return std::cos(x2); });
    EXPECT_LT(max_abs(s_operator(cos2, 1.5).physical_values()), 1e-15);
    EXPECT_THROW(s_operator(cos2, 2.0), ConfigError);
    EXPECT_THROW(s_operator(cos2, 1.0), ConfigError);
}

TEST(Multiplier, SBarOperator) {
    const SpectralGrid g(16);
    EXPECT_LT(max_abs_diff(sbar_operator(sampled(g, cos1), 1.5), std::pow(2.0, -0.75) * sampled(g, cos1)),
              1e-13);
    EXPECT_LT(max_abs(sbar_operator(ScalarField::constant(g, 2.0), 1.5).physical_values()), 1e-15);
}

TEST(Multiplier, NSymbolAndOperator) {
    EXPECT_NEAR(symbols::n_symbol_real(1.5, 1.0, 0.0), std::pow(2.0, -0.75) - 1.0, 1e-15);
    EXPECT_NEAR(symbols::n_symbol_real(1.5, 1.0, 0.0), -0.405396, 1e-6);
    EXPECT_EQ(symbols::n_symbol_real(1.5, 0.0, 0.0), 0.0);
    // Direct form |xi|^a xi1 / (1+|xi|^2)^(a/2) - xi1 at moderate |xi|.
    for (double r : {0.1, 1.0, 7.0}) {
        const double x1 = 0.6 * r, x2 = 0.8 * r;
        const double direct = std::pow(r, 1.5) * x1 / std::pow(1 + r * r, 0.75) - x1;
        EXPECT_NEAR(symbols::n_symbol_real(1.5, x1, x2), direct, 1e-12 * std::max(1.0, std::abs(direct)));
    }
    const SpectralGrid g(16);
    EXPECT_LT(max_abs_diff(n_operator(sampled(g, cos1), 1.5), 0.405396 * sampled(g, sin1)), 1e-6);
    EXPECT_LT(max_abs(n_operator(ScalarField::constant(g, 3.0), 1.5).physical_values()), 1e-15);
}

TEST(Multiplier, NMatchesComposition) {
    // N = (tildeLambda^-a Lambda^a - I) d1, applied step by step.
    const SpectralGrid g(64);
    const double alpha = 1.5;
    const ScalarField f = random_field(g, RandomFieldSpec{1.0, 20, true, 1.0}, 17);
    const ScalarField d1f = partial_derivative(f, Axis::X1);
    const ScalarField composed =
        apply_multiplier(fractional_laplacian(d1f, alpha), symbols::bessel_potential(-alpha)) - d1f;
    EXPECT_LT(max_abs_diff(composed, n_operator(f, alpha)), 1e-13 * max_abs(d1f.physical_values()));
}

TEST(Multiplier, OutputIsRealForOddSymbols) {
    // Nyquist content is zeroed by odd symbols, so the inverse transform of
    // the product must be consistent with a real field.
    const SpectralGrid g(16);
    RealArray v(g.physical_size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = (i % 2 ? 1.0 : -1.0) + std::sin(0.3 * i);
    const ScalarField f = ScalarField::from_physical(g, v);
    const ScalarField out = s_operator(f, 1.5);
    const ScalarField back = forward_transform(inverse_transform(ScalarField::from_spectral(g, out.spectral_values())));
    const ComplexArray a = out.spectral_values();
    const ComplexArray b = back.spectral();
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_LT(std::abs(a[i] - b[i]), 1e-12);
}

TEST(Multiplier, NonFiniteSymbolIsReported) {
    EXPECT_THROW(MultiplierSpec("bad", 0.0, [](double, double) { return std::complex<double>(std::numeric_limits<double>::infinity()); }),
                 ConfigError);
    const MultiplierSpec spiky("spiky", 0.0, [](double x1, double) {
        return x1 == 2.0 ? std::complex<double>(std::nan("")) : std::complex<double>(1.0);
    });
    try {
        LatticeSymbol(SpectralGrid(8), spiky);
        FAIL() << "expected NumericalError";
    } catch (const NumericalError& e) {
        EXPECT_NE(std::string(e.what()).find("2"), std::string::npos);
    }
}

TEST(Multiplier, DeclaredOrdersHold) {
    for (const MultiplierSpec& m :
         {symbols::s_operator(1.5), symbols::sbar_operator(1.3), symbols::n_operator(1.5),
          symbols::m_tilde(1.5), symbols::riesz_bessel(), symbols::fractional_laplacian(0.7),
          symbols::bessel_potential(-1.2)}) {
        const double bound = measured_order_bound(m);
        EXPECT_TRUE(std::isfinite(bound)) << m.name();
        EXPECT_LT(bound, 10.0) << m.name();
    }
    const MultiplierSpec c = compose(symbols::derivative(Axis::X1), symbols::bessel_potential(-1.5));
    EXPECT_DOUBLE_EQ(c.order(), -0.5);
    EXPECT_LT(std::abs(c(1.0, 0.0) - symbols::s_operator(1.5)(1.0, 0.0)), 1e-15);
}

TEST(HmCheck, RieszBesselTypeSymbolHasFiniteSups) {
    const HmDecayReport r = hm_decay_check(symbols::riesz_bessel(), 2);
    EXPECT_TRUE(r.all_finite());
    ASSERT_EQ(r.entries.size(), 6u);
    for (const HmEntry& e : r.entries) EXPECT_LT(e.sup, 10.0);
    EXPECT_GT(r.entries.front().sup, 0.99);
    EXPECT_LE(r.entries.front().sup, 1.0);
}

TEST(HmCheck, MTildeHasFiniteSups) {
    const HmDecayReport r = hm_decay_check(symbols::m_tilde(1.5), 2);
    EXPECT_TRUE(r.all_finite());
    ASSERT_EQ(r.entries.size(), 6u);
    for (const HmEntry& e : r.entries) {
        EXPECT_TRUE(std::isfinite(e.sup));
        EXPECT_LT(e.sup, 10.0);
    }
    // beta = 0: |m~| -> alpha/2 * |xi1|/|xi| at large |xi|.
    EXPECT_NEAR(r.entries.front().sup, 0.75, 0.05);
}

TEST(HmCheck, DetectsGrowingSymbol) {
    const HmDecayReport r = hm_decay_check(symbols::fractional_laplacian(0.5), 1);
    for (const HmEntry& e : r.entries) {
        if (e.beta1 == 0 && e.beta2 == 0) EXPECT_GT(e.sup, 30.0);
    }
    EXPECT_THROW(hm_decay_check(symbols::identity(), 3), ConfigError);
}

TEST(Smoothing, SingleModeRatio) {
    const SpectralGrid g(32);
    const double ratio = n_smoothing_ratio_of(sampled(g, cos1), 1.5, 2.0);
    EXPECT_NEAR(ratio, 2.0 * (1.0 - std::pow(2.0, -0.75)), 1e-12);
    EXPECT_NEAR(ratio, 0.810792, 1e-6);
    EXPECT_EQ(n_smoothing_ratio_of(ScalarField::constant(g, 2.0), 1.5, 4.0), 0.0);
    EXPECT_EQ(n_smoothing_ratio_of(ScalarField::zeros(g), 1.5, 4.0), 0.0);
}

TEST(Smoothing, TrialsAreSeededAndStableUnderRefinement) {
    const SmoothingResult a = n_smoothing_ratio(1.5, 4.0, 8, 7, SpectralGrid(64));
    const SmoothingResult b = n_smoothing_ratio(1.5, 4.0, 8, 7, SpectralGrid(64));
    const SmoothingResult c = n_smoothing_ratio(1.5, 4.0, 8, 7, SpectralGrid(128));
    EXPECT_EQ(a.ratios, b.ratios);
    EXPECT_GT(a.max_ratio, 0.0);
    EXPECT_LT(std::abs(c.max_ratio / a.max_ratio - 1.0), 0.1);
}
