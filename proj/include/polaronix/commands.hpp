// commands.hpp — CLI subcommand pipelines: config resolution, computation, CSV and manifest output

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "polaronix/config.hpp"

namespace polaronix::commands {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;    // I/O or anything unexpected
inline constexpr int kExitConfig = 2;     // invalid config, preset or flags
inline constexpr int kExitNumerical = 3;  // quadrature or grid failure during computation

enum class Command { Kernels, Rates, Evolve, Sweep, OracleGen };

const char* command_name(Command cmd);
const char* version();

struct Options {
    std::optional<std::filesystem::path> config_path;
    std::optional<std::string> preset;
    std::optional<std::filesystem::path> out_dir;
    std::optional<unsigned> workers;
    std::optional<double> dt;
    std::optional<double> t_max;        // also sets the sweep horizon
    std::vector<double> oracle_times;   // oracle-gen only; empty means {1}
};

// --workers, else POLARONIX_WORKERS, else all hardware threads. Throws
// ConfigError when the environment value is not a positive integer.
unsigned resolve_worker_count(const std::optional<unsigned>& flag);

struct ResolvedCase {
    std::string label;                 // empty for single-case runs
    config::RunConfig config;
    std::filesystem::path directory;   // where this case's files go
};

// Defaults, then the config file, then the preset case, then flag overrides;
// each case is validated. Throws ConfigError.
std::vector<ResolvedCase> resolve(Command cmd, const Options& opt);

// Runs the subcommand and returns the process exit code. Diagnostics go to `err`.
int run(Command cmd, const Options& opt, std::ostream& err);

} // namespace polaronix::commands
