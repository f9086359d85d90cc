#include "fbq/app/commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "fbq/dynamics/boussinesq.hpp"
#include "fbq/dynamics/integrator.hpp"
#include "fbq/errors.hpp"
#include "fbq/spectral/norms.hpp"
#include "fbq/spectral/snapshot.hpp"

namespace fbq {
namespace {

void print_error(std::ostream& out, const std::string& kind, const std::string& message) {
    nlohmann::ordered_json j;
    j["error"] = kind;
    j["message"] = message;
    out << j.dump() << '\n';
}

template <class F>
int guarded(std::ostream& out, F&& body) {
    try {
        return body();
    } catch (const ConfigError& e) {
        print_error(out, "config", e.what());
        return kExitConfig;
    } catch (const NumericalError& e) {
        print_error(out, "numerical", e.what());
        return kExitNumerical;
    } catch (const std::exception& e) {
        print_error(out, "io", e.what());
        return kExitNumerical;
    }
}

std::ofstream open_output(const std::filesystem::path& p) {
    std::ofstream f(p, std::ios::binary);
    if (!f) throw NumericalError("cannot open " + p.string() + " for writing");
    return f;
}

}  // namespace

std::vector<double> sample_times(double T, double samples_per_unit) {
    std::vector<double> ts;
    const long last = static_cast<long>(std::floor(T * samples_per_unit + 1e-9));
    for (long k = 0; k <= last; ++k) ts.push_back(std::min(static_cast<double>(k) / samples_per_unit, T));
    if (ts.back() < T) ts.push_back(T);
    return ts;
}

RunResult run_simulation(const RunConfig& cfg, SolverState state, std::ostream* ndjson) {
    validate(cfg);
    if (state.grid().n() != cfg.grid || state.alpha != cfg.alpha) {
        throw ConfigError("initial state does not match the configured grid and alpha");
    }
    if (state.formulation != cfg.formulation) state = convert(state, cfg.formulation);
    const Integrator integrator(state.grid(), cfg.alpha);
    StepperConfig step_cfg;
    step_cfg.cfl_safety = cfg.cfl;

    RunResult result{{}, {}, state, 0};
    auto record = [&](const SolverState& s) {
        const DiagnosticsRecord* prev = result.records.empty() ? nullptr : &result.records.back();
        result.records.push_back(sample(s, cfg.diagnostics, prev));
        if (ndjson) *ndjson << to_json(result.records.back()).dump() << '\n' << std::flush;
    };

    const std::vector<double> ts = sample_times(cfg.T, cfg.samples);
    state.t = 0.0;
    record(state);
    for (std::size_t k = 1; k < ts.size(); ++k) {
        const double target = ts[k];
        if (cfg.dt > 0.0) {
            const double span = target - state.t;
            const long steps = std::max(1L, static_cast<long>(std::ceil(span / cfg.dt - 1e-9)));
            step_cfg.dt = span / static_cast<double>(steps);
            for (long i = 0; i < steps; ++i) {
                state = integrator.step(state, step_cfg);
                ++result.steps;
            }
        } else {
            while (state.t < target) {
                double h = std::min(cfg.max_dt, 0.9 * integrator.cfl_limit(state, cfg.cfl));
                if (state.t + h >= target - 1e-12 * std::max(1.0, target)) h = target - state.t;
                step_cfg.dt = h;
                state = integrator.step(state, step_cfg);
                ++result.steps;
            }
        }
        state.t = target;
        record(state);
    }
    result.verdict = persistence_verdict(result.records, cfg.diagnostics);
    result.final_state = std::move(state);
    return result;
}

RunResult run_simulation(const RunConfig& cfg, std::ostream* ndjson) {
    validate(cfg);
    return run_simulation(cfg, initial_state(cfg), ndjson);
}

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(out, [&] {
        for (const std::string& w : validate(cfg)) err << "warning: " << w << '\n';
        std::filesystem::create_directories(cfg.out);
        {
            std::ofstream f = open_output(cfg.out / "config.json");
            f << to_json(cfg).dump(2) << '\n';
        }
        std::ofstream ndjson = open_output(cfg.out / "diagnostics.ndjson");
        const RunResult r = run_simulation(cfg, &ndjson);
        write_snapshot(cfg.out / "rho.snap", r.final_state.rho);
        write_snapshot(cfg.out / "omega.snap", convert(r.final_state, Formulation::Vorticity).vort);

        nlohmann::ordered_json j = to_json(r.verdict);
        j["steps"] = r.steps;
        j["records"] = r.records.size();
        {
            std::ofstream f = open_output(cfg.out / "verdict.json");
            f << j.dump(2) << '\n';
        }
        out << j.dump(2) << '\n';
        return r.verdict.passed ? kExitOk : kExitFail;
    });
}

int check_command(const std::string& suite, const SuiteOptions& opts, std::ostream& out) {
    return guarded(out, [&] {
        const InequalityReport r = run_suite(suite, opts);
        out << to_json(r).dump(2) << '\n';
        return r.passed ? kExitOk : kExitFail;
    });
}

int norms_command(const std::filesystem::path& snapshot, double s, double q, std::ostream& out) {
    return guarded(out, [&] {
        const ScalarField f = read_snapshot(snapshot);
        nlohmann::ordered_json j;
        j["snapshot"] = snapshot.string();
        j["grid"] = f.grid().n();
        j["s"] = s;
        j["q"] = q;
        j["lq"] = lq_norm(f, q);
        j["sobolev"] = sobolev_norm(f, s, q);
        out << j.dump(2) << '\n';
        return kExitOk;
    });
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fractional Boussinesq simulator and verification suite", "fbq"};
    app.require_subcommand(1);

    CLI::App* run = app.add_subcommand("run", "integrate the equations and certify the run");
    std::string config_path;
    bool print_config = false;
    run->add_option("--config", config_path, "config file (flat key = value)");
    run->add_flag("--print-config", print_config, "print the resolved config as JSON and exit");
    std::map<std::string, std::vector<std::string>> flags;
    std::map<std::string, CLI::Option*> flag_opts;
    for (const ConfigKey& k : config_keys()) {
        CLI::Option* o = run->add_option("--" + k.name, flags[k.name], k.help);
        if (k.name == "rho-q") {
            o->expected(1, -1)->delimiter(',');
        } else {
            o->expected(1);
        }
        flag_opts[k.name] = o;
    }

    CLI::App* check = app.add_subcommand("check", "run an operator identity or inequality suite");
    std::string suite;
    SuiteOptions sopts;
    double s_value = 0.0, p_value = 0.0;
    check->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
    check->add_option("--trials", sopts.trials, "number of random trials");
    check->add_option("--seed", sopts.seed, "base seed");
    check->add_option("--grid", sopts.grid, "grid points per direction");
    check->add_option("--fine-grid", sopts.fine_grid, "refinement grid (0: twice --grid)");
    check->add_option("--alpha", sopts.alpha, "dissipation exponent");
    CLI::Option* s_opt = check->add_option("--s", s_value, "smoothness parameter");
    check->add_option("--q", sopts.q, "Lebesgue exponent");
    CLI::Option* p_opt = check->add_option("--p", p_value, "Cordoba exponent");
    check->add_flag("--nonnegative", sopts.nonnegative, "shift trial fields to be nonnegative");
    check->add_option("--decay", sopts.field.decay, "spectral decay of trial fields");
    check->add_option("--kmax", sopts.field.max_wavenumber, "largest wavenumber of trial fields");

    CLI::App* norms = app.add_subcommand("norms", "L^q and W^{s,q} norms of a snapshot");
    std::string snapshot;
    double norm_s = 1.5, norm_q = 4.0;
    norms->add_option("--snapshot", snapshot, "snapshot path")->required();
    norms->add_option("--s", norm_s, "Sobolev smoothness");
    norms->add_option("--q", norm_q, "Lebesgue exponent");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        print_error(out, "config", e.what());
        return kExitConfig;
    }

    if (*check) {
        if (s_opt->count()) sopts.s = s_value;
        if (p_opt->count()) sopts.p = p_value;
        return check_command(suite, sopts, out);
    }
    if (*norms) return norms_command(snapshot, norm_s, norm_q, out);

    RunConfig cfg;
    const int rc = guarded(out, [&] {
        std::vector<CLI::ConfigItem> items;
        if (!config_path.empty()) {
            try {
                items = CLI::ConfigTOML().from_file(config_path);
            } catch (const CLI::Error& e) {
                throw ConfigError("cannot read config " + config_path + ": " + e.what());
            }
        }
        std::erase_if(items, [](const CLI::ConfigItem& it) { return it.name == "++" || it.name == "--"; });
        for (const CLI::ConfigItem& it : items) {
            if (!it.parents.empty() && !(it.parents.size() == 1 && it.parents[0] == "run")) {
                throw ConfigError("unsupported config section for key " + it.name);
            }
        }

        std::string preset = "random";
        for (const CLI::ConfigItem& it : items) {
            if (it.name == "preset" && it.inputs.size() == 1) preset = it.inputs[0];
        }
        if (flag_opts["preset"]->count()) preset = flags["preset"].at(0);
        cfg = preset_config(preset);
        for (const CLI::ConfigItem& it : items) apply_setting(cfg, it.name, it.inputs);
        for (const ConfigKey& k : config_keys()) {
            if (flag_opts[k.name]->count()) apply_setting(cfg, k.name, flags[k.name]);
        }
        validate(cfg);
        return kExitOk;
    });
    if (rc != kExitOk) return rc;
    if (print_config) {
        out << to_json(cfg).dump(2) << '\n';
        return kExitOk;
    }
    return run_command(cfg, out, err);
}

}  // namespace fbq
