// presets.cpp — Figure preset table

#include "polaronix/presets.hpp"

namespace polaronix::presets {

namespace {

std::vector<Case> coupling_cases(double s, double sp) {
    return {{"strong", s, sp, 5.0, 5.0}, {"intermediate", s, sp, 1.0, 1.0}, {"weak", s, sp, 0.1, 0.1}};
}

std::vector<Case> asymmetric_cases(double s, double sp) {
    return {{"a5-b0.1", s, sp, 5.0, 0.1},
            {"a0.1-b5", s, sp, 0.1, 5.0},
            {"a1-b5", s, sp, 1.0, 5.0},
            {"a5-b1", s, sp, 5.0, 1.0}};
}

struct Pair {
    const char* panel;
    const char* label;
    double s;
    double sp;
};

constexpr Pair kSweepPairs[] = {{"a", "s0.5-sp0.5", 0.5, 0.5}, {"b", "s0.5-sp1", 0.5, 1.0},
                                {"c", "s0.5-sp2", 0.5, 2.0},   {"d", "s1-sp1", 1.0, 1.0},
                                {"e", "s1-sp2", 1.0, 2.0},     {"f", "s2-sp2", 2.0, 2.0}};

std::vector<Case> sweep_cases() {
    std::vector<Case> out;
    for (const auto& p : kSweepPairs) out.push_back({p.label, p.s, p.sp});
    return out;
}

std::vector<Preset> build() {
    std::vector<Preset> v{
        {"fig2", Kind::Trajectory, "super-Ohmic pair s = s' = 2", coupling_cases(2.0, 2.0)},
        {"fig3", Kind::Trajectory, "Ohmic and super-Ohmic, s = 1, s' = 2", coupling_cases(1.0, 2.0)},
        {"fig4", Kind::Trajectory, "sub-Ohmic pair s = s' = 0.5", coupling_cases(0.5, 0.5)},
        {"fig6", Kind::Trajectory, "sub-Ohmic and super-Ohmic, s = 0.5, s' = 2", coupling_cases(0.5, 2.0)},
        {"fig7", Kind::Trajectory, "Ohmic pair s = s' = 1", coupling_cases(1.0, 1.0)},
        {"fig8", Kind::Trajectory, "sub-Ohmic and Ohmic, s = 0.5, s' = 1", coupling_cases(0.5, 1.0)},
        {"fig9", Kind::Trajectory, "s = 0.5, s' = 1 at asymmetric couplings", asymmetric_cases(0.5, 1.0)},
        {"fig10", Kind::Trajectory, "s = 0.5, s' = 2 at asymmetric couplings", asymmetric_cases(0.5, 2.0)},
        {"fig11", Kind::Trajectory, "s = 1, s' = 2 at asymmetric couplings", asymmetric_cases(1.0, 2.0)},
        {"fig1", Kind::Sweep, "renormalized hopping J~/J over (alpha, beta), all six exponent pairs", sweep_cases(),
         10},
        {"fig5", Kind::Sweep, "non-Markovianity over (alpha, beta), all six exponent pairs", sweep_cases(), 32},
    };
    const auto pairs = sweep_cases();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const std::string name = std::string("fig5") + kSweepPairs[i].panel;
        v.push_back({name, Kind::Sweep, "non-Markovianity panel " + pairs[i].label, {pairs[i]}, 32});
    }
    return v;
}

} // namespace

const std::vector<Preset>& all() {
    static const std::vector<Preset> table = build();
    return table;
}

std::optional<Preset> find(std::string_view name) {
    for (const auto& p : all()) {
        if (p.name == name) return p;
    }
    for (const auto& p : all()) {
        if (p.cases.size() < 2) continue;
        for (const auto& c : p.cases) {
            if (p.name + "-" + c.label == name) {
                Preset single = p;
                single.name = std::string(name);
                single.cases = {c};
                return single;
            }
        }
    }
    return std::nullopt;
}

config::RunConfig apply(const Preset& preset, const Case& c, config::RunConfig base) {
    base.bath1.exponent = c.s;
    base.bath2.exponent = c.s_prime;
    if (preset.kind == Kind::Trajectory) {
        base.bath1.coupling = c.alpha;
        base.bath2.coupling = c.beta;
    } else {
        base.sweep.alpha = {0.1, 5.0, preset.sweep_points};
        base.sweep.beta = {0.1, 5.0, preset.sweep_points};
    }
    return base;
}

} // namespace polaronix::presets
