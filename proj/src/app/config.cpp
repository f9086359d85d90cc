#include "fbq/app/config.hpp"

#include <cmath>
#include <cstdio>

#include "fbq/errors.hpp"
#include "fbq/multipliers/operators.hpp"

namespace fbq {
namespace {

const std::string& single(const std::string& key, const std::vector<std::string>& v) {
    if (v.size() != 1) throw ConfigError("key '" + key + "' expects one value");
    return v.front();
}

double to_double(const std::string& key, const std::string& s) {
    try {
        std::size_t pos = 0;
        const double d = std::stod(s, &pos);
        if (pos == s.size()) return d;
    } catch (const std::exception&) {
    }
    throw ConfigError("key '" + key + "': not a number: '" + s + "'");
}

long long to_integer(const std::string& key, const std::string& s) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(s, &pos);
        if (pos == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw ConfigError("key '" + key + "': not an integer: '" + s + "'");
}

using Setter = std::function<void(RunConfig&, const std::vector<std::string>&)>;

Setter real(std::string key, double RunConfig::*m) {
    return [key, m](RunConfig& c, const std::vector<std::string>& v) { c.*m = to_double(key, single(key, v)); };
}

template <class F>
Setter real_with(std::string key, F assign) {
    return [key, assign](RunConfig& c, const std::vector<std::string>& v) {
        assign(c, to_double(key, single(key, v)));
    };
}

}  // namespace

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {"shear", "random", "persistence", "underresolved",
                                                   "file"};
    return names;
}

RunConfig preset_config(const std::string& name) {
    RunConfig c;
    c.preset = name;
    if (name == "shear") {
        c.grid = 64;
        c.T = 1.0;
        c.dt = 1e-3;
        c.formulation = Formulation::Vorticity;
        c.initial.kind = "shear";
    } else if (name == "random") {
        c.initial.kind = "random";
    } else if (name == "persistence") {
        c.grid = 256;
        c.T = 5.0;
        c.alpha = 1.5;
        c.diagnostics.s = 1.5;
        c.diagnostics.q = 4.0;
        c.initial.kind = "random";
        c.initial.field = RandomFieldSpec{2.0, 4, true, 1.0};
        c.initial.omega_norm = 1.0;
        c.initial.rho_norm = 0.5;
    } else if (name == "underresolved") {
        c.grid = 32;
        c.T = 1.0;
        c.initial.kind = "rough";
        c.initial.field = RandomFieldSpec{0.0, 15, true, 1.0};
    } else if (name == "file") {
        c.initial.kind = "file";
    } else {
        throw ConfigError("unknown preset: " + name);
    }
    return c;
}

const std::vector<ConfigKey>& config_keys() {
    static const std::vector<ConfigKey> keys = [] {
        std::vector<ConfigKey> k;
        k.push_back({"preset", "named experiment supplying defaults", [](RunConfig& c, const auto& v) {
                         const std::string p = single("preset", v);
                         preset_config(p);
                         c.preset = p;
                     }});
        k.push_back({"grid", "grid points per direction", [](RunConfig& c, const auto& v) {
                         c.grid = static_cast<int>(to_integer("grid", single("grid", v)));
                     }});
        k.push_back({"alpha", "dissipation exponent in (1, 2)", real("alpha", &RunConfig::alpha)});
        k.push_back({"s", "Sobolev smoothness of tracked norms",
                     real_with("s", [](RunConfig& c, double x) { c.diagnostics.s = x; })});
        k.push_back({"q", "Lebesgue exponent of tracked norms",
                     real_with("q", [](RunConfig& c, double x) { c.diagnostics.q = x; })});
        k.push_back({"T", "final time", real("T", &RunConfig::T)});
        k.push_back({"dt", "fixed time step (0: CFL-limited automatic step)", real("dt", &RunConfig::dt)});
        k.push_back({"cfl", "CFL safety factor in (0, 1]", real("cfl", &RunConfig::cfl)});
        k.push_back({"max-dt", "largest automatic step", real("max-dt", &RunConfig::max_dt)});
        k.push_back({"samples", "diagnostic samples per unit time", real("samples", &RunConfig::samples)});
        k.push_back({"formulation", "vorticity | zeta", [](RunConfig& c, const auto& v) {
                         c.formulation = parse_formulation(single("formulation", v));
                     }});
        k.push_back({"initial", "initial condition: shear | random | rough | file",
                     [](RunConfig& c, const auto& v) {
                         const std::string s = single("initial", v);
                         if (s != "shear" && s != "random" && s != "rough" && s != "file") {
                             throw ConfigError("unknown initial condition: " + s);
                         }
                         c.initial.kind = s;
                     }});
        k.push_back({"seed", "seed of every random draw", [](RunConfig& c, const auto& v) {
                         const long long s = to_integer("seed", single("seed", v));
                         if (s < 0) throw ConfigError("seed must be nonnegative");
                         c.initial.seed = static_cast<std::uint64_t>(s);
                     }});
        k.push_back({"decay", "spectral decay exponent of random data",
                     real_with("decay", [](RunConfig& c, double x) { c.initial.field.decay = x; })});
        k.push_back({"kmax", "largest wavenumber of random data", [](RunConfig& c, const auto& v) {
                         c.initial.field.max_wavenumber = static_cast<int>(to_integer("kmax", single("kmax", v)));
                     }});
        k.push_back({"omega-norm", "L^q norm of the initial vorticity",
                     real_with("omega-norm", [](RunConfig& c, double x) { c.initial.omega_norm = x; })});
        k.push_back({"rho-norm", "L^q norm of the initial density",
                     real_with("rho-norm", [](RunConfig& c, double x) { c.initial.rho_norm = x; })});
        k.push_back({"rho-file", "density snapshot (file initial condition)",
                     [](RunConfig& c, const auto& v) { c.initial.rho_file = single("rho-file", v); }});
        k.push_back({"omega-file", "vorticity snapshot (file initial condition)",
                     [](RunConfig& c, const auto& v) { c.initial.omega_file = single("omega-file", v); }});
        k.push_back({"rho-q", "exponents of the density L^q series", [](RunConfig& c, const auto& v) {
                         if (v.empty()) throw ConfigError("rho-q needs at least one exponent");
                         c.diagnostics.rho_q.clear();
                         for (const std::string& s : v) c.diagnostics.rho_q.push_back(to_double("rho-q", s));
                     }});
        k.push_back({"tail-threshold", "resolution threshold on tail energy",
                     real_with("tail-threshold", [](RunConfig& c, double x) { c.diagnostics.tail_threshold = x; })});
        k.push_back({"growth-ceiling", "largest admissible envelope rate B",
                     real_with("growth-ceiling", [](RunConfig& c, double x) { c.diagnostics.growth_ceiling = x; })});
        k.push_back({"drift-tolerance", "allowed relative drift of density norms",
                     real_with("drift-tolerance", [](RunConfig& c, double x) { c.diagnostics.drift_tolerance = x; })});
        k.push_back({"floor", "floor for envelope log fits",
                     real_with("floor", [](RunConfig& c, double x) { c.diagnostics.floor = x; })});
        k.push_back({"out", "output directory",
                     [](RunConfig& c, const auto& v) { c.out = single("out", v); }});
        return k;
    }();
    return keys;
}

void apply_setting(RunConfig& cfg, const std::string& key, const std::vector<std::string>& values) {
    for (const ConfigKey& k : config_keys()) {
        if (k.name != key) continue;
        k.set(cfg, values);
        return;
    }
    throw ConfigError("unknown config key: " + key);
}

std::vector<std::string> validate(const RunConfig& c) {
    SpectralGrid check(c.grid);
    require_alpha(c.alpha);
    const DiagnosticsConfig& d = c.diagnostics;
    if (!(d.s >= 0.0) || !std::isfinite(d.s)) throw ConfigError("s must be finite and >= 0");
    if (!(d.q > 1.0) || !std::isfinite(d.q)) throw ConfigError("q must be finite and > 1");
    for (double q : d.rho_q) {
        if (!(q >= 1.0)) throw ConfigError("rho-q exponents must be >= 1");
    }
    if (!(c.T >= 0.0) || !std::isfinite(c.T)) throw ConfigError("T must be finite and >= 0");
    if (!(c.dt >= 0.0) || !std::isfinite(c.dt)) throw ConfigError("dt must be finite and >= 0");
    if (!(c.cfl > 0.0 && c.cfl <= 1.0)) throw ConfigError("cfl must lie in (0, 1]");
    if (!(c.max_dt > 0.0)) throw ConfigError("max-dt must be positive");
    if (!(c.samples > 0.0) || !std::isfinite(c.samples)) throw ConfigError("samples must be positive");
    if (!(d.tail_threshold > 0.0)) throw ConfigError("tail-threshold must be positive");
    if (!(d.floor > 0.0)) throw ConfigError("floor must be positive");
    if (!(d.drift_tolerance >= 0.0)) throw ConfigError("drift-tolerance must be >= 0");
    if (std::isnan(d.growth_ceiling)) throw ConfigError("growth-ceiling must be a number");
    if (c.initial.kind == "random" || c.initial.kind == "rough") {
        const RandomFieldSpec& f = c.initial.field;
        if (f.max_wavenumber < 1 || 2 * f.max_wavenumber >= c.grid) {
            throw ConfigError("kmax must satisfy 1 <= kmax < grid/2");
        }
        if (!(c.initial.omega_norm >= 0.0) || !(c.initial.rho_norm >= 0.0)) {
            throw ConfigError("initial norms must be >= 0");
        }
    }
    if (c.initial.kind == "file" && c.initial.rho_file.empty() && c.initial.omega_file.empty()) {
        throw ConfigError("file initial condition needs rho-file and/or omega-file");
    }

    std::vector<std::string> warnings;
    if (!(d.s > 1.0)) warnings.push_back("s <= 1 is outside the persistence range s > 1");
    if (!(d.q > 2.0)) warnings.push_back("q <= 2 is outside the persistence range 2 < q < inf");
    return warnings;
}

nlohmann::ordered_json to_json(const RunConfig& c) {
    nlohmann::ordered_json j;
    j["preset"] = c.preset;
    j["grid"] = c.grid;
    j["alpha"] = c.alpha;
    j["s"] = c.diagnostics.s;
    j["q"] = c.diagnostics.q;
    j["T"] = c.T;
    j["dt"] = c.dt;
    j["cfl"] = c.cfl;
    j["max-dt"] = c.max_dt;
    j["samples"] = c.samples;
    j["formulation"] = std::string(to_string(c.formulation));
    j["initial"] = c.initial.kind;
    j["seed"] = c.initial.seed;
    j["decay"] = c.initial.field.decay;
    j["kmax"] = c.initial.field.max_wavenumber;
    j["omega-norm"] = c.initial.omega_norm;
    j["rho-norm"] = c.initial.rho_norm;
    j["rho-file"] = c.initial.rho_file.string();
    j["omega-file"] = c.initial.omega_file.string();
    j["rho-q"] = c.diagnostics.rho_q;
    j["tail-threshold"] = c.diagnostics.tail_threshold;
    j["growth-ceiling"] = c.diagnostics.growth_ceiling;
    j["drift-tolerance"] = c.diagnostics.drift_tolerance;
    j["floor"] = c.diagnostics.floor;
    j["out"] = c.out.string();
    return j;
}

}  // namespace fbq
