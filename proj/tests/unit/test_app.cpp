#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fbq/app/commands.hpp"
#include "fbq/errors.hpp"
#include "fbq/spectral/norms.hpp"
#include "fbq/spectral/snapshot.hpp"
#include "oracles.hpp"

using namespace fbq;
using namespace fbq::testing;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
    nlohmann::json json() const { return nlohmann::json::parse(out); }
};

CliResult cli(std::vector<std::string> args) {
    args.insert(args.begin(), "fbq");
    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("fbq_app_test_" + name);
    fs::remove_all(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST(Config, PresetsAndSettings) {
    for (const std::string& p : preset_names()) EXPECT_NO_THROW(preset_config(p));
    EXPECT_THROW(preset_config("bogus"), ConfigError);
    RunConfig c = preset_config("random");
    apply_setting(c, "grid", {"48"});
    apply_setting(c, "rho-q", {"2", "3"});
    apply_setting(c, "formulation", {"vorticity"});
    EXPECT_EQ(c.grid, 48);
    EXPECT_EQ(c.diagnostics.rho_q, (std::vector<double>{2.0, 3.0}));
    EXPECT_EQ(c.formulation, Formulation::Vorticity);
    EXPECT_THROW(apply_setting(c, "grid", {"4x"}), ConfigError);
    EXPECT_THROW(apply_setting(c, "alpha", {"1", "2"}), ConfigError);
    EXPECT_THROW(apply_setting(c, "colour", {"red"}), ConfigError);
    EXPECT_THROW(apply_setting(c, "initial", {"vortex"}), ConfigError);
}

TEST(Config, ValidationWarnsOutsidePersistenceRange) {
    RunConfig c = preset_config("random");
    EXPECT_TRUE(validate(c).empty());
    c.diagnostics.q = 2.0;
    c.diagnostics.s = 1.0;
    EXPECT_EQ(validate(c).size(), 2u);
    c.alpha = 2.0;
    EXPECT_THROW(validate(c), ConfigError);
    c = preset_config("random");
    c.initial.field.max_wavenumber = 64;
    EXPECT_THROW(validate(c), ConfigError);
    c = preset_config("file");
    EXPECT_THROW(validate(c), ConfigError);
}

TEST(Config, SampleTimes) {
    EXPECT_EQ(sample_times(0.0, 20.0), std::vector<double>{0.0});
    const auto ts = sample_times(1.0, 4.0);
    EXPECT_EQ(ts, (std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0}));
    const auto odd = sample_times(0.3, 5.0);
    EXPECT_EQ(odd.size(), 3u);
    EXPECT_EQ(odd.back(), 0.3);
}

TEST(Cli, ShearPresetDecaysExactly) {
    const fs::path out = scratch("shear");
    const CliResult r = cli({"run", "--preset", "shear", "--out", out.string()});
    ASSERT_EQ(r.code, kExitOk) << r.out;
    EXPECT_EQ(r.json()["verdict"], "PASS");
    const ScalarField w = read_snapshot(out / "omega.snap");
    const ScalarField expect = sampled(w.grid(), [](double x1, double) { return std::exp(-1.0) * std::cos(x1); });
    EXPECT_LE(lq_norm(w - expect, 2.0) / lq_norm(w, 2.0), 1e-8);
    EXPECT_TRUE(fs::exists(out / "rho.snap"));
    EXPECT_TRUE(fs::exists(out / "verdict.json"));
    EXPECT_TRUE(fs::exists(out / "config.json"));
    fs::remove_all(out);
}

TEST(Cli, ZeroFinalTime) {
    const fs::path out = scratch("t0");
    const CliResult r = cli({"run", "--grid", "32", "--T", "0", "--out", out.string()});
    ASSERT_EQ(r.code, kExitOk) << r.out;
    const std::string nd = slurp(out / "diagnostics.ndjson");
    EXPECT_EQ(std::count(nd.begin(), nd.end(), '\n'), 1);
    fs::remove_all(out);
}

TEST(Cli, RandomRunsAreByteIdentical) {
    const fs::path a = scratch("det_a"), b = scratch("det_b");
    const std::vector<std::string> common = {"run", "--grid", "32", "--T", "0.2", "--seed", "9", "--out"};
    auto args_a = common, args_b = common;
    args_a.push_back(a.string());
    args_b.push_back(b.string());
    ASSERT_EQ(cli(args_a).code, kExitOk);
    ASSERT_EQ(cli(args_b).code, kExitOk);
    const std::string da = slurp(a / "diagnostics.ndjson");
    EXPECT_FALSE(da.empty());
    EXPECT_EQ(da, slurp(b / "diagnostics.ndjson"));
    EXPECT_EQ(slurp(a / "omega.snap"), slurp(b / "omega.snap"));
    fs::remove_all(a);
    fs::remove_all(b);
}

TEST(Cli, ConfigFileWithFlagOverride) {
    const fs::path dir = scratch("cfg");
    fs::create_directories(dir);
    {
        std::ofstream f(dir / "run.toml");
        f << "# test config\n[run]\npreset = \"shear\"\ngrid = 32\nT = 0.5\nrho-q = [2, 4]\nformulation = \"zeta\"\n";
    }
    const CliResult r = cli({"run", "--config", (dir / "run.toml").string(), "--T", "0.25", "--print-config"});
    ASSERT_EQ(r.code, kExitOk) << r.out;
    const auto j = r.json();
    EXPECT_EQ(j["preset"], "shear");
    EXPECT_EQ(j["grid"], 32);
    EXPECT_EQ(j["T"], 0.25);
    EXPECT_EQ(j["dt"], 1e-3);
    EXPECT_EQ(j["formulation"], "zeta");
    EXPECT_EQ(j["rho-q"], nlohmann::json::array({2.0, 4.0}));

    {
        std::ofstream f(dir / "bad.toml");
        f << "gird = 32\n";
    }
    EXPECT_EQ(cli({"run", "--config", (dir / "bad.toml").string()}).code, kExitConfig);
    EXPECT_EQ(cli({"run", "--config", (dir / "missing.toml").string()}).code, kExitConfig);
    fs::remove_all(dir);
}

TEST(Cli, ErrorsMapToExitCodes) {
    const fs::path out = scratch("err");
    CliResult r = cli({"run", "--alpha", "2.5", "--out", out.string()});
    EXPECT_EQ(r.code, kExitConfig);
    EXPECT_EQ(r.json()["error"], "config");
    EXPECT_EQ(cli({"frobnicate"}).code, kExitConfig);
    EXPECT_EQ(cli({"check", "--suite", "nope"}).code, kExitConfig);

    r = cli({"run", "--grid", "32", "--T", "0.5", "--dt", "0.4", "--omega-norm", "20", "--out", out.string()});
    EXPECT_EQ(r.code, kExitNumerical);
    EXPECT_EQ(r.json()["error"], "numerical");
    fs::remove_all(out);
}

TEST(Cli, UnderresolvedPresetFailsOnResolution) {
    const fs::path out = scratch("under");
    const CliResult r = cli({"run", "--preset", "underresolved", "--T", "0.2", "--out", out.string()});
    EXPECT_EQ(r.code, kExitFail);
    const auto v = r.json()["violated"];
    EXPECT_NE(std::find(v.begin(), v.end(), "resolution"), v.end());
    fs::remove_all(out);
}

TEST(Cli, CheckSuites) {
    CliResult r = cli({"check", "--suite", "identity", "--trials", "64", "--seed", "7"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_TRUE(r.json()["passed"].get<bool>());

    r = cli({"check", "--suite", "cordoba", "--p", "2", "--s", "1", "--nonnegative", "--trials", "8", "--grid", "64"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_LE(std::abs(r.json()["worstMargin"].get<double>()), 1e-10);

    r = cli({"check", "--suite", "hm", "--alpha", "1.5"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_TRUE(r.json()["passed"].get<bool>());
}

TEST(Cli, Norms) {
    const fs::path dir = scratch("norms");
    fs::create_directories(dir);
    const SpectralGrid g(32);
    write_snapshot(dir / "zero.snap", ScalarField::zeros(g));
    write_snapshot(dir / "sin.snap", sampled(g, [](double x1, double) { return std::sin(x1); }));

    CliResult r = cli({"norms", "--snapshot", (dir / "zero.snap").string()});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.json()["lq"], 0.0);
    EXPECT_EQ(r.json()["sobolev"], 0.0);

    r = cli({"norms", "--snapshot", (dir / "sin.snap").string(), "--q", "2"});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_NEAR(r.json()["lq"].get<double>(), 4.442883, 1e-6);

    r = cli({"norms", "--snapshot", (dir / "sin.snap").string(), "--s", "0", "--q", "3"});
    EXPECT_EQ(r.json()["lq"].get<double>(), r.json()["sobolev"].get<double>());

    EXPECT_EQ(cli({"norms", "--snapshot", (dir / "none.snap").string()}).code, kExitNumerical);
    fs::remove_all(dir);
}
