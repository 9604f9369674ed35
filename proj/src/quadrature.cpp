// quadrature.cpp — Breakpoint helpers for the panel integrator

#include "polaronix/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace polaronix::quad {

std::vector<double> geometric_breaks(double a, double b, double first_width) {
    std::vector<double> out{a};
    if (!(b > a)) return out;
    double width = std::max(first_width, (b - a) * 1e-15);
    double x = a + width;
    while (x < b) {
        out.push_back(x);
        width *= 2.0;
        x = a + width;
    }
    out.push_back(b);
    return out;
}

std::vector<double> cap_width(std::vector<double> breaks, double max_width) {
    if (breaks.size() < 2 || !(max_width > 0.0)) return breaks;
    std::vector<double> out{breaks.front()};
    for (std::size_t i = 1; i < breaks.size(); ++i) {
        const double a = out.back();
        const double b = breaks[i];
        const auto pieces = static_cast<std::size_t>(std::ceil((b - a) / max_width));
        for (std::size_t k = 1; k < pieces; ++k) {
            out.push_back(a + (b - a) * static_cast<double>(k) / static_cast<double>(pieces));
        }
        out.push_back(b);
    }
    return out;
}

} // namespace polaronix::quad
