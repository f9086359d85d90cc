#include <gtest/gtest.h>

#include "fbq/diagnostics/envelope.hpp"
#include "fbq/diagnostics/record.hpp"
#include "fbq/diagnostics/verdict.hpp"
#include "fbq/dynamics/boussinesq.hpp"
#include "fbq/errors.hpp"
#include "fbq/multipliers/operators.hpp"
#include "fbq/spectral/norms.hpp"
#include "fbq/spectral/random_field.hpp"
#include "oracles.hpp"

using namespace fbq;
using namespace fbq::testing;

namespace {

using Series = std::vector<std::pair<double, double>>;

SolverState random_state(const SpectralGrid& g, std::uint64_t seed) {
    const RandomFieldSpec spec{2.0, 5, true, 1.0};
    return SolverState(random_field(g, spec, seed), random_field(g, spec, seed + 100), Formulation::Zeta, 0.0, 1.5);
}

}  // namespace

TEST(Sample, ZeroState) {
    const SpectralGrid g(16);
    const SolverState s(ScalarField::zeros(g), ScalarField::zeros(g), Formulation::Vorticity, 0.0, 1.5);
    const DiagnosticsRecord r = sample(s, DiagnosticsConfig{});
    const auto j = to_json(r);
    for (const auto& [k, v] : j.items()) EXPECT_EQ(v.get<double>(), 0.0) << k;
}

TEST(Sample, ClosedFormsAndKeyOrder) {
    const SpectralGrid g(32);
    const SolverState s(sampled(g, [](double x1, double) { return std::sin(x1); }), ScalarField::zeros(g),
                        Formulation::Vorticity, 0.0, 1.5);
    DiagnosticsConfig cfg;
    cfg.rho_q = {2.0};
    const DiagnosticsRecord r = sample(s, cfg);
    EXPECT_NEAR(r.lq_rho.at(0).second, kPi * std::sqrt(2.0), 1e-12);
    // zeta = -S sin(x1) = -2^(-3/4) cos(x1).
    EXPECT_NEAR(r.lq_zeta, std::pow(2.0, -0.75) * std::pow(1.5 * kPi * kPi, 0.25), 1e-12);
    EXPECT_EQ(r.lq_omega, 0.0);
    EXPECT_NEAR(r.sobolev_rho, std::pow(2.0, 0.75) * std::pow(1.5 * kPi * kPi, 0.25), 1e-12);

    std::vector<std::string> keys;
    const auto j = to_json(r);
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    EXPECT_EQ(keys, record_keys(cfg));
    EXPECT_EQ(keys.front(), "t");
    EXPECT_EQ(keys.at(1), "lqRho_2");
}

TEST(Sample, VelocityQuantities) {
    const SpectralGrid g(32);
    const SolverState s(ScalarField::zeros(g), sampled(g, [](double x1, double) { return std::cos(x1); }),
                        Formulation::Vorticity, 0.0, 1.5);
    const DiagnosticsRecord r = sample(s, DiagnosticsConfig{});
    // u = (0, sin x1), grad u has the single entry cos x1.
    EXPECT_NEAR(r.lq_u, std::pow(1.5 * kPi * kPi, 0.25), 1e-12);
    EXPECT_NEAR(r.lip_u, 1.0, 1e-12);
    EXPECT_LT(r.tail_energy, 1e-28);
}

TEST(Sample, TrapezoidIncrementForConstantState) {
    const SpectralGrid g(32);
    SolverState s = random_state(g, 1);
    const DiagnosticsConfig cfg;
    const DiagnosticsRecord a = sample(s, cfg);
    s.t = 0.25;
    const DiagnosticsRecord b = sample(s, cfg, &a);
    EXPECT_EQ(a.diss_integral, 0.0);
    EXPECT_GT(a.diss_rate, 0.0);
    EXPECT_NEAR(b.diss_integral, 0.25 * a.diss_rate, 1e-14 * a.diss_rate);
}

TEST(Sample, TriangleInequalityAndFiniteness) {
    const SpectralGrid g(32);
    const DiagnosticsRecord r = sample(random_state(g, 3), DiagnosticsConfig{});
    EXPECT_LE(r.lq_omega, r.lq_zeta + r.lq_s_rho + 1e-12);
    const auto j = to_json(r);
    for (const auto& [k, v] : j.items()) {
        EXPECT_TRUE(std::isfinite(v.get<double>())) << k;
        EXPECT_GE(v.get<double>(), 0.0) << k;
    }
}

TEST(Sample, NonFiniteFieldIsNamed) {
    const SpectralGrid g(16);
    RealArray v(g.physical_size(), 0.0);
    v[5] = std::nan("");
    const SolverState s(ScalarField::from_physical(g, v), ScalarField::zeros(g), Formulation::Zeta, 0.0, 1.5);
    try {
        sample(s, DiagnosticsConfig{});
        FAIL() << "expected NumericalError";
    } catch (const NumericalError& e) {
        EXPECT_NE(std::string(e.what()).find("rho"), std::string::npos) << e.what();
    }
}

TEST(TailEnergy, OuterThirdFraction) {
    const SpectralGrid g(36);  // outer third starts above 2n/9 = 8
    const ScalarField lo = sampled(g, [](double x1, double) { return std::cos(8 * x1); });
    const ScalarField hi = sampled(g, [](double, double x2) { return std::cos(9 * x2); });
    EXPECT_LT(tail_energy_fraction(g, lo.spectral_values()), 1e-28);
    EXPECT_NEAR(tail_energy_fraction(g, hi.spectral_values()), 1.0, 1e-15);
    EXPECT_NEAR(tail_energy_fraction(g, (lo + 2.0 * hi).spectral_values()), 0.8, 1e-14);
    EXPECT_EQ(tail_energy_fraction(g, ScalarField::constant(g, 5.0).spectral_values()), 0.0);
}

TEST(Envelope, RecoversExactExponential) {
    Series s;
    for (int k = 0; k <= 50; ++k) s.emplace_back(0.1 * k, 2.5 * std::exp(0.7 * 0.1 * k));
    const EnvelopeFit f = fit_envelope(s, 1e-14, "x");
    EXPECT_NEAR(f.A / 2.5, 1.0, 1e-9);
    EXPECT_NEAR(f.B / 0.7, 1.0, 1e-9);
    EXPECT_LE(f.max_rel_excess, 0.0);
    EXPECT_FALSE(f.degenerate);
    EXPECT_EQ(f.quantity, "x");
}

TEST(Envelope, ConstantSeries) {
    const Series s = {{0.0, 3.0}, {1.0, 3.0}, {2.0, 3.0}};
    const EnvelopeFit f = fit_envelope(s);
    EXPECT_NEAR(f.B, 0.0, 1e-15);
    EXPECT_NEAR(f.A, 3.0, 1e-14);
}

TEST(Envelope, BoundsEverySample) {
    Series s;
    for (int k = 0; k <= 200; ++k) {
        const double t = 0.05 * k;
        s.emplace_back(t, std::exp(0.3 * t) * (1.5 + std::sin(7 * t)) + (k == 117 ? 40.0 : 0.0));
    }
    const EnvelopeFit f = fit_envelope(s);
    EXPECT_LE(f.max_rel_excess, 0.0);
    for (const auto& [t, v] : s) EXPECT_LE(v, f.A * std::exp(f.B * t));
}

TEST(Envelope, DegenerateAndErrors) {
    const EnvelopeFit z = fit_envelope(Series{{0.0, 0.0}, {1.0, 0.0}});
    EXPECT_TRUE(z.degenerate);
    EXPECT_TRUE(std::isfinite(z.A));
    const EnvelopeFit one = fit_envelope(Series{{0.0, 2.0}});
    EXPECT_EQ(one.B, 0.0);
    EXPECT_THROW(fit_envelope(Series{}), ConfigError);
    EXPECT_THROW(fit_envelope(Series{{0.0, -1.0}}), ConfigError);
    EXPECT_THROW(fit_envelope(Series{{0.0, std::nan("")}}), ConfigError);
}

namespace {

std::vector<DiagnosticsRecord> synthetic(double tail, double growth, double drift) {
    std::vector<DiagnosticsRecord> rs;
    for (int k = 0; k <= 10; ++k) {
        DiagnosticsRecord r;
        r.t = 0.1 * k;
        for (double q : {2.0, 4.0, 8.0}) r.lq_rho.emplace_back(q, 1.0 + drift * k);
        r.lq_zeta = r.lq_omega = r.lq_u = std::exp(growth * r.t);
        r.sobolev_rho = r.sobolev_zeta = r.lip_u = r.lq_s_rho = 1.0;
        r.diss_rate = 1.0;
        r.diss_integral = r.t;
        r.tail_energy = tail;
        rs.push_back(r);
    }
    return rs;
}

}  // namespace

TEST(Verdict, ZeroRunPasses) {
    const SpectralGrid g(16);
    const SolverState s(ScalarField::zeros(g), ScalarField::zeros(g), Formulation::Vorticity, 0.0, 1.5);
    const DiagnosticsConfig cfg;
    const VerdictReport v = persistence_verdict({sample(s, cfg)}, cfg);
    EXPECT_TRUE(v.passed);
    EXPECT_TRUE(v.violated.empty());
}

TEST(Verdict, ClausesAreReported) {
    const DiagnosticsConfig cfg;
    EXPECT_TRUE(persistence_verdict(synthetic(0.0, 1.0, 0.0), cfg).passed);

    const VerdictReport tail = persistence_verdict(synthetic(1e-3, 1.0, 0.0), cfg);
    EXPECT_EQ(tail.violated, std::vector<std::string>{"resolution"});

    const VerdictReport growth = persistence_verdict(synthetic(0.0, 50.0, 0.0), cfg);
    EXPECT_EQ(growth.violated, std::vector<std::string>{"envelope"});

    const VerdictReport drift = persistence_verdict(synthetic(0.0, 1.0, 1e-4), cfg);
    EXPECT_EQ(drift.violated, std::vector<std::string>{"conservation"});

    auto bad = synthetic(0.0, 1.0, 0.0);
    bad.back().diss_integral = std::numeric_limits<double>::infinity();
    EXPECT_EQ(persistence_verdict(bad, cfg).violated, std::vector<std::string>{"dissipation"});

    EXPECT_THROW(persistence_verdict({}, cfg), ConfigError);
}

TEST(Verdict, JsonShape) {
    const DiagnosticsConfig cfg;
    const auto j = to_json(persistence_verdict(synthetic(1e-3, 1.0, 0.0), cfg));
    EXPECT_EQ(j["verdict"], "FAIL");
    EXPECT_EQ(j["violated"][0], "resolution");
    EXPECT_EQ(j["envelopes"].size(), tracked_norms(cfg).size() + 1);
    for (const auto& e : j["envelopes"]) EXPECT_LE(e["maxRelExcess"].get<double>(), 0.0);
}
