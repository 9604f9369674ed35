// nonmarkov.hpp — Coherence-backflow non-Markovianity and (alpha, beta) sweeps

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "polaronix/dynamics.hpp"
#include "polaronix/grid.hpp"
#include "polaronix/spectral.hpp"

namespace polaronix::nonmarkov {

// Increments smaller than this are rounding noise, not backflow.
inline constexpr double kIncrementFloor = 1e-12;

// Sum of the positive increments of the coherence series: the discrete form of
// the integral of dC/dt over the intervals where it is positive.
double nm_measure(std::span<const double> coherence, std::span<const double> time_grid);
double nm_measure(std::span<const double> coherence, const UniformGrid& time_grid);

struct GridMeta {
    double dt{0.01};
    double ir_cutoff{spectral::kDefaultIrCutoff};
    double uv_cutoff{1.0};
    double hopping{1.0};
};

struct SweepSpec {
    double s{0.5};
    double s_prime{0.5};
    std::vector<double> alpha_grid;
    std::vector<double> beta_grid;
    double horizon{20.0};
    GridMeta meta{};
    dynamics::QubitState initial{dynamics::default_initial_state()};
    unsigned workers{1};
};

struct CellError {
    std::size_t alpha_index{0};
    std::size_t beta_index{0};
    std::string message;
};

// Cells are stored alpha-major: index = alpha_index * beta_grid.size() + beta_index.
struct SweepResult {
    double s{0.0};
    double s_prime{0.0};
    std::vector<double> alpha_grid;
    std::vector<double> beta_grid;
    std::vector<double> nm_values;      // NaN where the cell is invalid
    std::vector<double> hopping_ratio;  // J~/J per cell
    std::vector<char> valid;
    double horizon{0.0};
    GridMeta meta{};
    std::vector<CellError> errors;

    std::size_t cell(std::size_t ia, std::size_t ib) const { return ia * beta_grid.size() + ib; }
    double nm(std::size_t ia, std::size_t ib) const { return nm_values[cell(ia, ib)]; }
};

// One kernels -> rates -> evolve -> measure pipeline per cell. Quadrature is
// done once per bath exponent; each cell scales the unit kernels by its
// couplings. A failing cell is recorded in `errors` and marked invalid.
SweepResult sweep(const SweepSpec& spec);

std::vector<double> linspace(double first, double last, std::size_t count);

} // namespace polaronix::nonmarkov
