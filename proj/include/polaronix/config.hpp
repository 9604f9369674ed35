// config.hpp — Run configuration: INI parsing, validation and round-trip serialization
//
// Sections and keys (all optional; defaults shown):
//
//   [model]         J = 1, omega = 1, omega_min = 0.001
//   [bath1]         coupling = 0, exponent = 1
//   [bath2]         coupling = 0, exponent = 1
//   [grid]          dt = 0.01, t_max = 20
//   [initial_state] rho_ss = 2/3, rho_tt = 1/3, re_rho_st = sqrt(2)/3, im_rho_st = 0
//   [sweep]         alpha_min = 0.1, alpha_max = 5, alpha_n = 32,
//                   beta_min = 0.1, beta_max = 5, beta_n = 32, horizon = 20
//   [output]        dir = out, prefix = (empty)
//
// Unknown sections or keys are rejected so that typos cannot silently fall
// back to defaults. ';' or '#' starts a comment at line start or after whitespace.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "polaronix/dynamics.hpp"
#include "polaronix/grid.hpp"
#include "polaronix/nonmarkov.hpp"
#include "polaronix/spectral.hpp"

namespace polaronix::config {

struct ModelSection {
    double hopping{1.0};
    double uv_cutoff{1.0};
    double ir_cutoff{spectral::kDefaultIrCutoff};
};

struct BathSection {
    double coupling{0.0};
    double exponent{1.0};
};

struct GridSection {
    double dt{0.01};
    double t_max{20.0};
};

struct AxisSpec {
    double min{0.1};
    double max{5.0};
    std::size_t count{32};
};

struct SweepSection {
    AxisSpec alpha{};
    AxisSpec beta{};
    double horizon{20.0};
};

struct OutputSection {
    std::filesystem::path dir{"out"};
    std::string prefix;
};

struct RunConfig {
    ModelSection model{};
    BathSection bath1{};
    BathSection bath2{};
    GridSection grid{};
    dynamics::QubitState initial{dynamics::default_initial_state()};
    SweepSection sweep{};
    OutputSection output{};

    // Every constraint of BathSpec, ModelParams, the grids and the initial
    // state; throws ConfigError naming the offending field.
    void validate() const;

    spectral::ModelParams model_params() const;
    UniformGrid time_grid() const;  // [0, t_max] at dt
    nonmarkov::SweepSpec sweep_spec(unsigned workers) const;
};

RunConfig parse(std::istream& is);
RunConfig load(const std::filesystem::path& path);

// INI text that parses back to an identical RunConfig.
std::string to_ini(const RunConfig& cfg);

} // namespace polaronix::config
