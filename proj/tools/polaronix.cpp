// polaronix.cpp — Command-line entry point

#include <iostream>

#include <CLI11.hpp>

#include "polaronix/commands.hpp"
#include "polaronix/presets.hpp"

namespace {

using polaronix::commands::Command;

struct Flags {
    std::string config;
    std::string preset;
    std::string out;
    unsigned workers{0};
    double dt{0.0};
    double tmax{0.0};
    std::vector<double> at;
};

void add_common(CLI::App* sub, Flags& f) {
    sub->add_option("--config", f.config, "INI run configuration")->check(CLI::ExistingFile);
    sub->add_option("--preset", f.preset, "figure preset, e.g. fig2, fig2-strong, fig5a");
    sub->add_option("--out", f.out, "output directory (overrides [output] dir)");
    sub->add_option("--workers", f.workers, "worker threads (default: $POLARONIX_WORKERS, else all cores)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--dt", f.dt, "grid step (overrides [grid] dt)")->check(CLI::PositiveNumber);
    sub->add_option("--tmax", f.tmax, "time horizon (overrides [grid] t_max and [sweep] horizon)")
        ->check(CLI::PositiveNumber);
}

polaronix::commands::Options to_options(const Flags& f, const CLI::App* sub) {
    polaronix::commands::Options o;
    if (sub->count("--config")) o.config_path = f.config;
    if (sub->count("--preset")) o.preset = f.preset;
    if (sub->count("--out")) o.out_dir = f.out;
    if (sub->count("--workers")) o.workers = f.workers;
    if (sub->count("--dt")) o.dt = f.dt;
    if (sub->count("--tmax")) o.t_max = f.tmax;
    o.oracle_times = f.at;
    return o;
}

std::string preset_listing() {
    std::string text = "Presets:\n";
    for (const auto& p : polaronix::presets::all()) {
        text += "  " + p.name + std::string(p.name.size() < 8 ? 8 - p.name.size() : 1, ' ') + p.description;
        if (p.cases.size() > 1) {
            text += " (cases:";
            for (const auto& c : p.cases) text += " " + c.label;
            text += ")";
        }
        text += "\n";
    }
    return text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"polaronix: polaron-frame dynamics and non-Markovianity of a dressed two-site qubit"};
    app.set_version_flag("--version", std::string(polaronix::commands::version()));
    app.require_subcommand(1);
    app.footer(preset_listing());

    Flags flags;
    struct Entry {
        Command cmd;
        const char* desc;
        CLI::App* sub{nullptr};
    };
    std::vector<Entry> entries{
        {Command::Kernels, "bath kernels phi_c, phi_s -> kernels.csv"},
        {Command::Rates, "TCL2 rates -> rates.csv"},
        {Command::Evolve, "singlet/triplet trajectory -> rates.csv, trajectory.csv"},
        {Command::Sweep, "non-Markovianity over an (alpha, beta) grid -> sweep.csv, hopping.csv"},
        {Command::OracleGen, ""},
    };
    for (auto& e : entries) {
        e.sub = app.add_subcommand(polaronix::commands::command_name(e.cmd), e.desc);
        add_common(e.sub, flags);
    }
    entries.back().sub->group("");
    entries.back().sub->add_option("--at", flags.at, "times at which to evaluate the brute-force references");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : polaronix::commands::kExitConfig;
    }
    for (const auto& e : entries) {
        if (e.sub->parsed()) return polaronix::commands::run(e.cmd, to_options(flags, e.sub), std::cerr);
    }
    return polaronix::commands::kExitConfig;
}
