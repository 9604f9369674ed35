// rates.cpp — Cumulative rate integrals over the kernel lag grid

#include "polaronix/rates.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "polaronix/errors.hpp"

namespace polaronix::rates {

std::complex<double> bath_correlation(const spectral::KernelTable& kernels, double u, Sign sign) {
    const std::size_t i = kernels.lag_grid.index_of(u);
    const double sigma = sign == Sign::Plus ? 1.0 : -1.0;
    const std::complex<double> exponent(sigma * kernels.phi_c[i], kernels.phi_s[i]);
    return std::exp(exponent) - 1.0;
}

std::vector<double> cumulative_trapezoid(std::span<const double> f, double h) {
    std::vector<double> out(f.size(), 0.0);
    for (std::size_t i = 1; i < f.size(); ++i) out[i] = out[i - 1] + 0.5 * h * (f[i - 1] + f[i]);
    return out;
}

namespace {

constexpr std::size_t kGregoryOrder = 5;
// Gregory end-correction coefficients for differences of order 1..5.
constexpr double kGregory[kGregoryOrder] = {1.0 / 12.0, 1.0 / 24.0, 19.0 / 720.0, 3.0 / 160.0, 863.0 / 60480.0};

// Differences of order 1..q: forward from f[first] or backward from f[first].
using Differences = std::array<double, kGregoryOrder + 1>;

Differences differences(std::span<const double> f, std::size_t first, std::size_t q, bool forward) {
    Differences window{};
    for (std::size_t k = 0; k <= q; ++k) window[k] = forward ? f[first + k] : f[first - k];
    Differences out{};
    for (std::size_t order = 1; order <= q; ++order) {
        for (std::size_t k = 0; k + order <= q; ++k) {
            window[k] = forward ? window[k + 1] - window[k] : window[k] - window[k + 1];
        }
        out[order] = window[0];
    }
    return out;
}

// int_0^m binom(s, k) ds for k = 0..q: weights of the Newton forward interpolant.
std::vector<double> newton_weights(std::size_t q, double m) {
    std::vector<double> weights(q + 1);
    std::vector<double> poly{1.0}; // coefficients of binom(s, k) in powers of s
    for (std::size_t k = 0; k <= q; ++k) {
        if (k > 0) {
            std::vector<double> next(poly.size() + 1, 0.0);
            const double shift = static_cast<double>(k - 1);
            for (std::size_t d = 0; d < poly.size(); ++d) {
                next[d + 1] += poly[d] / static_cast<double>(k);
                next[d] -= shift * poly[d] / static_cast<double>(k);
            }
            poly = std::move(next);
        }
        double integral = 0.0;
        for (std::size_t d = poly.size(); d-- > 0;) integral = integral * m + poly[d] / static_cast<double>(d + 1);
        weights[k] = integral * m;
    }
    return weights;
}

} // namespace

std::vector<double> cumulative_gregory(std::span<const double> f, double h) {
    const std::size_t n = f.size();
    std::vector<double> out = cumulative_trapezoid(f, h);
    if (n < 3) return out;
    const std::size_t q = std::min(kGregoryOrder, n - 1);
    const auto head = differences(f, 0, q, true);
    for (std::size_t i = 1; i < q; ++i) {
        const auto w = newton_weights(q, static_cast<double>(i));
        double sum = w[0] * f[0];
        for (std::size_t k = 1; k <= q; ++k) sum += w[k] * head[k];
        out[i] = h * sum;
    }
    for (std::size_t i = q; i < n; ++i) {
        const auto tail = differences(f, i, q, false);
        double correction = 0.0;
        for (std::size_t j = 1; j <= q; ++j) {
            const double sign = j % 2 == 0 ? 1.0 : -1.0;
            correction += kGregory[j - 1] * (tail[j] + sign * head[j]);
        }
        out[i] -= h * correction;
    }
    return out;
}

RateTable assemble_rates(UniformGrid time_grid, std::vector<double> gamma_plus, std::vector<double> gamma_minus,
                         std::vector<double> zeta, double jtilde) {
    const std::size_t n = time_grid.size();
    if (gamma_plus.size() != n || gamma_minus.size() != n || zeta.size() != n) {
        throw LengthError("rate arrays must match the time grid length " + std::to_string(n));
    }
    RateTable r;
    r.time_grid = time_grid;
    r.jtilde = jtilde;
    r.gamma0.resize(n);
    r.gamma1.resize(n);
    r.gamma2.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        r.gamma0[i] = (2.0 * gamma_plus[i] - gamma_minus[i]) / 2.0;
        r.gamma1[i] = 2.0 * gamma_plus[i] + gamma_minus[i];
        r.gamma2[i] = 4.0 * gamma_plus[i];
    }
    r.gamma_plus = std::move(gamma_plus);
    r.gamma_minus = std::move(gamma_minus);
    r.zeta = std::move(zeta);
    const double h = time_grid.step();
    r.int_gamma0 = cumulative_trapezoid(r.gamma0, h);
    r.int_gamma1 = cumulative_trapezoid(r.gamma1, h);
    r.int_gamma2 = cumulative_trapezoid(r.gamma2, h);
    return r;
}

RateTable compute_rates(const spectral::KernelTable& kernels, double jtilde) {
    if (!std::isfinite(jtilde) || !(jtilde > 0.0)) {
        throw ConfigError("renormalized hopping must be finite and > 0, got " + std::to_string(jtilde));
    }
    const std::size_t n = kernels.lag_grid.size();
    if (kernels.phi_c.size() != n || kernels.phi_s.size() != n) {
        throw LengthError("kernel table arrays do not match its lag grid");
    }
    // J~^2 exp(phi_c) is formed as exp(2 ln J~ + phi_c): at strong sub-Ohmic
    // coupling exp(phi_c(0)) overflows while the product stays O(J^2).
    const double log_j2 = 2.0 * std::log(jtilde);
    const double j2 = std::exp(log_j2);
    std::vector<double> plus(n), minus(n), shift(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double c = kernels.phi_c[i];
        const double cos_s = std::cos(kernels.phi_s[i]);
        const double grow = std::exp(log_j2 + c);
        plus[i] = grow * cos_s - j2;
        minus[i] = std::exp(log_j2 - c) * cos_s - j2;
        shift[i] = grow * std::sin(kernels.phi_s[i]);
    }
    const double h = kernels.lag_grid.step();
    auto gamma_plus = cumulative_gregory(plus, h);
    auto gamma_minus = cumulative_gregory(minus, h);
    auto zeta = cumulative_gregory(shift, h);
    for (std::size_t i = 0; i < n; ++i) {
        gamma_plus[i] *= 2.0;
        gamma_minus[i] *= 2.0;
    }
    return assemble_rates(kernels.lag_grid, std::move(gamma_plus), std::move(gamma_minus), std::move(zeta), jtilde);
}

RateTable compute_rates(const spectral::KernelTable& kernels, double jtilde, const UniformGrid& time_grid) {
    if (!time_grid.is_prefix_of(kernels.lag_grid)) {
        throw GridError("time grid (dt=" + std::to_string(time_grid.step()) + ", n=" +
                        std::to_string(time_grid.size()) + ") is not covered by the kernel lag grid (dt=" +
                        std::to_string(kernels.lag_grid.step()) + ", n=" +
                        std::to_string(kernels.lag_grid.size()) + ")");
    }
    RateTable full = compute_rates(kernels, jtilde);
    const std::size_t n = time_grid.size();
    auto head = [n](const std::vector<double>& v) { return std::vector<double>(v.begin(), v.begin() + n); };
    return assemble_rates(time_grid, head(full.gamma_plus), head(full.gamma_minus), head(full.zeta), jtilde);
}

} // namespace polaronix::rates
