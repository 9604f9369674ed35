// nonmarkov.cpp — Backflow measure and parallel parameter sweeps

#include "polaronix/nonmarkov.hpp"

#include <cmath>
#include <limits>
#include <optional>

#include "polaronix/errors.hpp"
#include "polaronix/parallel.hpp"
#include "polaronix/rates.hpp"

namespace polaronix::nonmarkov {

double nm_measure(std::span<const double> coherence, std::span<const double> time_grid) {
    if (coherence.size() != time_grid.size()) {
        throw LengthError("coherence series has " + std::to_string(coherence.size()) + " points but the time grid has " +
                          std::to_string(time_grid.size()));
    }
    if (coherence.size() < 2) throw LengthError("non-Markovianity needs at least two samples");
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < coherence.size(); ++i) {
        const double delta = coherence[i + 1] - coherence[i];
        if (delta > kIncrementFloor) total += delta;
    }
    return total;
}

double nm_measure(std::span<const double> coherence, const UniformGrid& time_grid) {
    const auto points = time_grid.points();
    return nm_measure(coherence, std::span<const double>(points));
}

std::vector<double> linspace(double first, double last, std::size_t count) {
    if (count == 0) throw ConfigError("grid must have at least one point");
    if (count == 1) return {first};
    std::vector<double> out(count);
    const double span = last - first;
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = first + span * static_cast<double>(i) / static_cast<double>(count - 1);
    }
    out.back() = last;
    return out;
}

namespace {

void check_axis(const std::vector<double>& axis, const char* name) {
    if (axis.empty()) throw ConfigError(std::string(name) + " grid is empty");
    for (double v : axis) {
        if (!std::isfinite(v) || v < 0.0) {
            throw ConfigError(std::string(name) + " grid values must be finite and >= 0");
        }
    }
}

} // namespace

SweepResult sweep(const SweepSpec& spec) {
    check_axis(spec.alpha_grid, "alpha");
    check_axis(spec.beta_grid, "beta");
    spec.initial.validate();
    const UniformGrid grid = UniformGrid::covering(spec.meta.dt, spec.horizon);
    const spectral::BathSpec shape1{1.0, spec.s, spec.meta.uv_cutoff, spec.meta.ir_cutoff};
    const spectral::BathSpec shape2{1.0, spec.s_prime, spec.meta.uv_cutoff, spec.meta.ir_cutoff};
    spectral::ModelParams{spec.meta.hopping, shape1, shape2}.validate();

    SweepResult out;
    out.s = spec.s;
    out.s_prime = spec.s_prime;
    out.alpha_grid = spec.alpha_grid;
    out.beta_grid = spec.beta_grid;
    out.horizon = spec.horizon;
    out.meta = spec.meta;
    const std::size_t cells = spec.alpha_grid.size() * spec.beta_grid.size();
    out.nm_values.assign(cells, std::numeric_limits<double>::quiet_NaN());
    out.hopping_ratio.assign(cells, std::numeric_limits<double>::quiet_NaN());
    out.valid.assign(cells, 0);

    std::optional<spectral::UnitKernel> unit1;
    std::optional<spectral::UnitKernel> unit2;
    std::string setup_error;
    try {
        unit1 = spectral::compute_unit_kernel(spec.s, spec.meta.ir_cutoff, spec.meta.uv_cutoff, grid, spec.workers);
        unit2 = (spec.s_prime == spec.s)
                    ? unit1
                    : spectral::compute_unit_kernel(spec.s_prime, spec.meta.ir_cutoff, spec.meta.uv_cutoff, grid,
                                                    spec.workers);
    } catch (const Error& e) {
        setup_error = e.what();
    }

    std::vector<std::string> messages(cells);
    parallel_for(cells, spec.workers, [&](std::size_t c) {
        if (!setup_error.empty()) {
            messages[c] = setup_error;
            return;
        }
        const double alpha = spec.alpha_grid[c / spec.beta_grid.size()];
        const double beta = spec.beta_grid[c % spec.beta_grid.size()];
        try {
            const auto kernels = spectral::combine_kernels(*unit1, alpha, *unit2, beta);
            const double jtilde = spectral::renormalized_hopping(spec.meta.hopping, kernels);
            const auto table = rates::compute_rates(kernels, jtilde);
            const auto traj = dynamics::evolve_ode(spec.initial, table);
            out.nm_values[c] = nm_measure(traj.coherence, grid);
            out.hopping_ratio[c] = jtilde / spec.meta.hopping;
            out.valid[c] = 1;
        } catch (const Error& e) {
            messages[c] = e.what();
        }
    });

    for (std::size_t c = 0; c < cells; ++c) {
        if (!out.valid[c]) out.errors.push_back({c / spec.beta_grid.size(), c % spec.beta_grid.size(), messages[c]});
    }
    return out;
}

} // namespace polaronix::nonmarkov
