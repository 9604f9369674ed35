// grid.hpp — Uniform time/lag grid shared by kernels, rates and trajectories

#pragma once

#include <cstddef>
#include <vector>

namespace polaronix {

// Points t_i = i * step for i in [0, size). Values are always recomputed from
// the index, never accumulated, so two grids with equal step agree bitwise.
class UniformGrid {
public:
    UniformGrid() = default;
    UniformGrid(double step, std::size_t size);

    // Grid covering [0, horizon]; throws GridError unless horizon is a
    // multiple of step (relative slack 1e-9).
    static UniformGrid covering(double step, double horizon);

    double step() const noexcept { return step_; }
    std::size_t size() const noexcept { return size_; }
    double at(std::size_t i) const noexcept { return static_cast<double>(i) * step_; }
    double back() const noexcept { return size_ == 0 ? 0.0 : at(size_ - 1); }

    // Index of a value lying on the grid; throws GridError otherwise.
    std::size_t index_of(double t) const;

    // Same step and this grid's points are a prefix of `other`.
    bool is_prefix_of(const UniformGrid& other) const noexcept;

    std::vector<double> points() const;

    bool operator==(const UniformGrid&) const = default;

private:
    double step_{0.0};
    std::size_t size_{0};
};

} // namespace polaronix
