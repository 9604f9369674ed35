// presets.hpp — Baked-in figure configurations
//
// Trajectory presets (fig2-fig4, fig6-fig11) hold one case per coupling pair;
// sweep presets (fig1, fig5, fig5a-fig5f) hold one case per exponent pair.
// Every case of a multi-case preset is also reachable as "<preset>-<label>".

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polaronix/config.hpp"

namespace polaronix::presets {

enum class Kind { Trajectory, Sweep };

struct Case {
    std::string label;
    double s{1.0};
    double s_prime{1.0};
    double alpha{0.0};  // trajectory presets only
    double beta{0.0};
};

struct Preset {
    std::string name;
    Kind kind{Kind::Trajectory};
    std::string description;
    std::vector<Case> cases;
    std::size_t sweep_points{32};  // per axis, sweep presets only
};

const std::vector<Preset>& all();

// Looks up a preset or a "<preset>-<label>" single-case alias.
std::optional<Preset> find(std::string_view name);

// `base` with the case's exponents and couplings (or sweep grid) applied.
config::RunConfig apply(const Preset& preset, const Case& c, config::RunConfig base);

} // namespace polaronix::presets
