// grid.cpp — UniformGrid

#include "polaronix/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polaronix/errors.hpp"

namespace polaronix {

UniformGrid::UniformGrid(double step, std::size_t size) : step_(step), size_(size) {
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw GridError("grid step must be positive and finite, got " + std::to_string(step));
    }
    if (size == 0) throw GridError("grid must contain at least one point");
}

UniformGrid UniformGrid::covering(double step, double horizon) {
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw GridError("grid step must be positive and finite, got " + std::to_string(step));
    }
    if (!(horizon >= 0.0) || !std::isfinite(horizon)) {
        throw GridError("horizon must be non-negative and finite, got " + std::to_string(horizon));
    }
    const double ratio = horizon / step;
    const double n = std::round(ratio);
    if (std::abs(ratio - n) > 1e-9 * std::max(1.0, ratio)) {
        throw GridError("horizon " + std::to_string(horizon) + " is not a multiple of dt " +
                        std::to_string(step));
    }
    return UniformGrid(step, static_cast<std::size_t>(n) + 1);
}

std::size_t UniformGrid::index_of(double t) const {
    const double ratio = t / step_;
    const double n = std::round(ratio);
    if (n < 0.0 || n >= static_cast<double>(size_) ||
        std::abs(ratio - n) > 1e-9 * std::max(1.0, std::abs(ratio))) {
        throw GridError("value " + std::to_string(t) + " is not a point of the grid (dt=" +
                        std::to_string(step_) + ", n=" + std::to_string(size_) + ")");
    }
    return static_cast<std::size_t>(n);
}

bool UniformGrid::is_prefix_of(const UniformGrid& other) const noexcept {
    return step_ == other.step_ && size_ <= other.size_;
}

std::vector<double> UniformGrid::points() const {
    std::vector<double> out(size_);
    for (std::size_t i = 0; i < size_; ++i) out[i] = at(i);
    return out;
}

} // namespace polaronix
