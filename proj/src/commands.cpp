// commands.cpp — Subcommand implementations

#include "polaronix/commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "polaronix/csv.hpp"
#include "polaronix/dynamics.hpp"
#include "polaronix/errors.hpp"
#include "polaronix/nonmarkov.hpp"
#include "polaronix/oracle.hpp"
#include "polaronix/parallel.hpp"
#include "polaronix/presets.hpp"
#include "polaronix/rates.hpp"
#include "polaronix/spectral.hpp"

#ifndef POLARONIX_VERSION
#define POLARONIX_VERSION "unknown"
#endif

namespace polaronix::commands {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

const char* command_name(Command cmd) {
    switch (cmd) {
    case Command::Kernels: return "kernels";
    case Command::Rates: return "rates";
    case Command::Evolve: return "evolve";
    case Command::Sweep: return "sweep";
    case Command::OracleGen: return "oracle-gen";
    }
    return "?";
}

const char* version() { return POLARONIX_VERSION; }

unsigned resolve_worker_count(const std::optional<unsigned>& flag) {
    if (flag) {
        if (*flag == 0) throw ConfigError("--workers must be >= 1");
        return *flag;
    }
    if (const char* env = std::getenv("POLARONIX_WORKERS"); env && *env) {
        const std::string text(env);
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(text, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != text.size() || v < 1 || v > 4096) {
            throw ConfigError("POLARONIX_WORKERS must be a positive integer, got '" + text + "'");
        }
        return static_cast<unsigned>(v);
    }
    return resolve_workers(0);
}

std::vector<ResolvedCase> resolve(Command cmd, const Options& opt) {
    config::RunConfig base = opt.config_path ? config::load(*opt.config_path) : config::RunConfig{};
    const bool wants_sweep = cmd == Command::Sweep;

    std::optional<presets::Preset> preset;
    if (opt.preset) {
        preset = presets::find(*opt.preset);
        if (!preset) throw ConfigError("unknown preset '" + *opt.preset + "'");
        if ((preset->kind == presets::Kind::Sweep) != wants_sweep) {
            throw ConfigError("preset '" + *opt.preset + "' is a " +
                              (preset->kind == presets::Kind::Sweep ? "sweep" : "trajectory") +
                              " preset and cannot drive the '" + command_name(cmd) + "' command");
        }
    }

    auto finish = [&](config::RunConfig cfg, std::string label, bool nested) {
        if (opt.dt) cfg.grid.dt = *opt.dt;
        if (opt.t_max) {
            cfg.grid.t_max = *opt.t_max;
            cfg.sweep.horizon = *opt.t_max;
        }
        if (opt.out_dir) cfg.output.dir = *opt.out_dir;
        cfg.validate();
        fs::path dir = cfg.output.dir;
        if (nested) dir /= label;
        cfg.output.dir = dir;
        return ResolvedCase{std::move(label), std::move(cfg), std::move(dir)};
    };

    std::vector<ResolvedCase> out;
    if (!preset) {
        out.push_back(finish(base, "", false));
        return out;
    }
    const bool nested = preset->cases.size() > 1;
    for (const auto& c : preset->cases) out.push_back(finish(presets::apply(*preset, c, base), c.label, nested));
    return out;
}

namespace {

json bath_json(const config::BathSection& b) { return {{"coupling", b.coupling}, {"exponent", b.exponent}}; }

json axis_json(const config::AxisSpec& a) { return {{"min", a.min}, {"max", a.max}, {"n", a.count}}; }

json config_json(const config::RunConfig& c) {
    return {{"model", {{"J", c.model.hopping}, {"omega", c.model.uv_cutoff}, {"omega_min", c.model.ir_cutoff}}},
            {"bath1", bath_json(c.bath1)},
            {"bath2", bath_json(c.bath2)},
            {"grid", {{"dt", c.grid.dt}, {"t_max", c.grid.t_max}}},
            {"initial_state",
             {{"rho_ss", c.initial.rho_ss},
              {"rho_tt", c.initial.rho_tt},
              {"re_rho_st", c.initial.rho_st.real()},
              {"im_rho_st", c.initial.rho_st.imag()}}},
            {"sweep", {{"alpha", axis_json(c.sweep.alpha)}, {"beta", axis_json(c.sweep.beta)}, {"horizon", c.sweep.horizon}}},
            {"output", {{"dir", c.output.dir.generic_string()}, {"prefix", c.output.prefix}}}};
}

// Collects the files of one case and writes them, plus the effective config and
// the manifest, from the calling thread.
class CaseOutput {
public:
    CaseOutput(Command cmd, const Options& opt, const ResolvedCase& rc, unsigned workers)
        : cmd_(cmd), rc_(rc), start_(std::chrono::steady_clock::now()) {
        manifest_["tool"] = "polaronix";
        manifest_["version"] = version();
        manifest_["command"] = command_name(cmd);
        manifest_["preset"] = opt.preset ? json(*opt.preset) : json(nullptr);
        manifest_["case"] = rc.label;
        manifest_["workers"] = workers;
        manifest_["config"] = config_json(rc.config);
        manifest_["outputs"] = json::array();
    }

    fs::path path(const std::string& name) const { return rc_.directory / (rc_.config.output.prefix + name); }

    void write(const std::string& name, std::size_t rows, const std::function<void(std::ostream&)>& writer) {
        csv::write_file(path(name), writer);
        manifest_["outputs"].push_back({{"file", rc_.config.output.prefix + name}, {"rows", rows}});
    }

    json& summary() { return manifest_["summary"]; }

    void close() {
        const std::string stem = rc_.config.output.prefix + command_name(cmd_);
        const std::string ini = stem + ".config.ini";
        csv::write_file(rc_.directory / ini, [&](std::ostream& os) { os << config::to_ini(rc_.config); });
        manifest_["config_file"] = ini;
        manifest_["reproduce"] = std::string("polaronix ") + command_name(cmd_) + " --config " + ini;
        manifest_["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        csv::write_file(rc_.directory / (stem + ".manifest.json"), [&](std::ostream& os) { os << manifest_.dump(2) << '\n'; });
    }

private:
    Command cmd_;
    const ResolvedCase& rc_;
    std::chrono::steady_clock::time_point start_;
    json manifest_;
};

std::string where(const ResolvedCase& rc) { return rc.label.empty() ? std::string() : " [" + rc.label + "]"; }

void run_pipeline(Command cmd, const ResolvedCase& rc, CaseOutput& out, unsigned workers, std::ostream& err) {
    const auto params = rc.config.model_params();
    const UniformGrid grid = rc.config.time_grid();
    const auto kernels = spectral::compute_kernels(params.bath1, params.bath2, grid, workers);
    const double jtilde = spectral::renormalized_hopping(params.hopping, kernels);
    out.summary()["jtilde"] = jtilde;
    out.summary()["jtilde_ratio"] = jtilde / params.hopping;
    if (cmd == Command::Kernels) {
        out.write("kernels.csv", grid.size(), [&](std::ostream& os) { csv::write_kernels(os, kernels); });
        return;
    }
    const auto table = rates::compute_rates(kernels, jtilde);
    out.write("rates.csv", grid.size(), [&](std::ostream& os) { csv::write_rates(os, table); });
    if (cmd == Command::Rates) return;

    const auto traj = dynamics::evolve_ode(rc.config.initial, table);
    out.write("trajectory.csv", grid.size(), [&](std::ostream& os) { csv::write_trajectory(os, traj); });
    out.summary()["nm"] = nonmarkov::nm_measure(traj.coherence, grid);
    out.summary()["horizon"] = grid.back();
    json pos{{"violations", traj.violations.size()}};
    if (!traj.violations.empty()) {
        double worst = 0.0;
        for (const auto& v : traj.violations) worst = std::min(worst, v.determinant);
        pos["first_time"] = traj.violations.front().time;
        pos["min_determinant"] = worst;
        err << "polaronix: warning" << where(rc) << ": density matrix lost positivity at " << traj.violations.size()
            << " grid points (first at t = " << traj.violations.front().time << ", min det = " << worst << ")\n";
    }
    out.summary()["positivity"] = pos;
}

void run_sweep(const ResolvedCase& rc, CaseOutput& out, unsigned workers, std::ostream& err) {
    const auto result = nonmarkov::sweep(rc.config.sweep_spec(workers));
    const std::size_t rows = result.nm_values.size();
    out.write("sweep.csv", rows, [&](std::ostream& os) { csv::write_sweep(os, result); });
    out.write("hopping.csv", rows, [&](std::ostream& os) { csv::write_hopping(os, result); });
    json cells = json::array();
    for (const auto& e : result.errors) {
        cells.push_back({{"alpha", result.alpha_grid[e.alpha_index]},
                         {"beta", result.beta_grid[e.beta_index]},
                         {"message", e.message}});
        err << "polaronix: warning" << where(rc) << ": cell alpha = " << result.alpha_grid[e.alpha_index]
            << ", beta = " << result.beta_grid[e.beta_index] << " is invalid: " << e.message << '\n';
    }
    double nm_max = 0.0;
    for (std::size_t c = 0; c < rows; ++c) {
        if (result.valid[c]) nm_max = std::max(nm_max, result.nm_values[c]);
    }
    out.summary()["horizon"] = result.horizon;
    out.summary()["cells"] = rows;
    out.summary()["invalid_cells"] = cells;
    out.summary()["nm_max"] = nm_max;
}

void run_oracle(const Options& opt, const ResolvedCase& rc, CaseOutput& out) {
    const auto params = rc.config.model_params();
    std::vector<double> times = opt.oracle_times.empty() ? std::vector<double>{1.0} : opt.oracle_times;
    const double phi0 = oracle::real_axis_kernel(params.bath1, params.bath2, 0.0).real();
    const double jtilde = params.hopping * std::exp(-0.5 * phi0);
    json rows = json::array();
    for (double t : times) {
        if (!(t >= 0.0) || !std::isfinite(t)) throw ConfigError("oracle times must be finite and >= 0");
        const auto k = oracle::real_axis_kernel(params.bath1, params.bath2, t);
        const auto r = oracle::brute_force_rates(params.bath1, params.bath2, jtilde, t);
        rows.push_back({{"t", t},
                        {"phi_c", k.real()},
                        {"phi_s", k.imag()},
                        {"gamma_plus", r.gamma_plus},
                        {"gamma_minus", r.gamma_minus},
                        {"zeta", r.zeta}});
    }
    json doc{{"jtilde", jtilde}, {"values", rows}};
    out.write("oracle.json", rows.size(), [&](std::ostream& os) { os << doc.dump(2) << '\n'; });
}

} // namespace

int run(Command cmd, const Options& opt, std::ostream& err) {
    std::vector<ResolvedCase> cases;
    unsigned workers = 1;
    try {
        workers = resolve_worker_count(opt.workers);
        cases = resolve(cmd, opt);
    } catch (const Error& e) {
        err << "polaronix: config error: " << e.what() << '\n';
        return kExitConfig;
    }

    for (const auto& rc : cases) {
        try {
            CaseOutput out(cmd, opt, rc, workers);
            switch (cmd) {
            case Command::Kernels:
            case Command::Rates:
            case Command::Evolve: run_pipeline(cmd, rc, out, workers, err); break;
            case Command::Sweep: run_sweep(rc, out, workers, err); break;
            case Command::OracleGen: run_oracle(opt, rc, out); break;
            }
            out.close();
        } catch (const ConfigError& e) {
            err << "polaronix: config error" << where(rc) << ": " << e.what() << '\n';
            return kExitConfig;
        } catch (const IoError& e) {
            err << "polaronix: error" << where(rc) << ": " << e.what() << '\n';
            return kExitFailure;
        } catch (const Error& e) {
            err << "polaronix: numerical failure" << where(rc) << ": " << e.what() << '\n';
            return kExitNumerical;
        } catch (const std::exception& e) {
            err << "polaronix: error" << where(rc) << ": " << e.what() << '\n';
            return kExitFailure;
        }
    }
    return kExitOk;
}

} // namespace polaronix::commands
