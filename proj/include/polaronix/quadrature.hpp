// quadrature.hpp — Adaptive Gauss–Legendre panel integration (real or complex integrands)

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "polaronix/errors.hpp"

namespace polaronix::quad {

struct Options {
    double rel_tol{1e-13};   // relative to the L1 norm of the integrand over the whole range
    double abs_tol{0.0};
    int max_depth{40};       // bisection levels per initial panel
};

namespace detail {

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }

using Rule = boost::math::quadrature::gauss<double, 20>;

template <class F, class Value>
Value refine(F& f, double a, double b, Value whole, double whole_l1, double tol_density,
             int depth, const Options& opt) {
    const double mid = 0.5 * (a + b);
    double l1_left = 0.0;
    double l1_right = 0.0;
    const Value left = Rule::integrate(f, a, mid, &l1_left);
    const Value right = Rule::integrate(f, mid, b, &l1_right);
    const Value halves = left + right;
    const double err = magnitude(halves - whole);
    const double budget = tol_density * (b - a);
    const double noise = 64.0 * std::numeric_limits<double>::epsilon() * std::max(whole_l1, l1_left + l1_right);
    if (err <= std::max(budget, noise)) return halves;
    if (depth >= opt.max_depth) {
        throw QuadratureError("adaptive Gauss-Legendre did not converge on [" + std::to_string(a) + ", " +
                              std::to_string(b) + "]: error estimate " + std::to_string(err) +
                              " exceeds budget " + std::to_string(budget));
    }
    return refine(f, a, mid, left, l1_left, tol_density, depth + 1, opt) +
           refine(f, mid, b, right, l1_right, tol_density, depth + 1, opt);
}

} // namespace detail

// Integrates f over [breaks.front(), breaks.back()] using the given breakpoints as
// initial panels. Each panel is bisected until the 20-point rule on it agrees with
// the sum over its two halves. The error budget is spread uniformly over the range
// and scaled by the L1 norm estimated on the initial panels.
template <class F>
auto integrate_panels(F&& f, std::span<const double> breaks, const Options& opt = {}) {
    using Value = decltype(f(0.0));
    if (breaks.size() < 2) return Value{};
    const double length = breaks.back() - breaks.front();
    if (!(length > 0.0)) return Value{};

    std::vector<Value> coarse(breaks.size() - 1);
    std::vector<double> l1(breaks.size() - 1);
    double l1_total = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        coarse[i] = detail::Rule::integrate(f, breaks[i], breaks[i + 1], &l1[i]);
        l1_total += l1[i];
    }
    if (!std::isfinite(l1_total)) throw QuadratureError("integrand is not finite on the integration range");
    const double tol = std::max(opt.abs_tol, opt.rel_tol * l1_total);
    const double density = tol / length;

    Value total{};
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        if (breaks[i + 1] <= breaks[i]) continue;
        total += detail::refine(f, breaks[i], breaks[i + 1], coarse[i], l1[i], density, 0, opt);
    }
    return total;
}

template <class F>
auto integrate(F&& f, double a, double b, const Options& opt = {}) {
    const double breaks[2] = {a, b};
    return integrate_panels(std::forward<F>(f), std::span<const double>(breaks, 2), opt);
}

// Breakpoints a, a + h, a + 2h, a + 4h, ... (doubling) until b is reached.
std::vector<double> geometric_breaks(double a, double b, double first_width);

// Merges breakpoints so that no panel inside [a, b] is wider than max_width.
std::vector<double> cap_width(std::vector<double> breaks, double max_width);

} // namespace polaronix::quad
