// oracle.cpp — Discrete-mode sums, real-axis kernels and tau-form rates

#include "polaronix/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "polaronix/errors.hpp"

namespace polaronix::oracle {

DiscreteBath discretize(const spectral::BathSpec& bath, std::size_t modes, double omega_max) {
    if (modes == 0) throw ConfigError("discrete bath needs at least one mode");
    if (!(omega_max > bath.ir_cutoff)) throw ConfigError("omega_max must exceed the infrared cutoff");
    DiscreteBath out;
    out.source = bath;
    out.mode_freqs.resize(modes);
    out.mode_weights.resize(modes);
    const double width = (omega_max - bath.ir_cutoff) / static_cast<double>(modes);
    for (std::size_t k = 0; k < modes; ++k) {
        const double w = bath.ir_cutoff + (static_cast<double>(k) + 0.5) * width;
        out.mode_freqs[k] = w;
        out.mode_weights[k] = spectral::spectral_density(bath, w) * width;
    }
    return out;
}

spectral::KernelTable discrete_kernels(const DiscreteBath& bath1, const DiscreteBath& bath2,
                                       const UniformGrid& lag_grid) {
    spectral::KernelTable out;
    out.lag_grid = lag_grid;
    out.baths = {bath1.source, bath2.source};
    out.phi_c.assign(lag_grid.size(), 0.0);
    out.phi_s.assign(lag_grid.size(), 0.0);
    for (std::size_t i = 0; i < lag_grid.size(); ++i) {
        const double u = lag_grid.at(i);
        double c = 0.0;
        double s = 0.0;
        for (const DiscreteBath* bath : {&bath1, &bath2}) {
            for (std::size_t k = 0; k < bath->mode_freqs.size(); ++k) {
                const double w = bath->mode_freqs[k];
                const double amp = bath->mode_weights[k] / (w * w);
                c += amp * std::cos(w * u);
                s += amp * std::sin(w * u);
            }
        }
        out.phi_c[i] = c;
        out.phi_s[i] = i == 0 ? 0.0 : s;
    }
    return out;
}

namespace {

using boost::math::quadrature::gauss_kronrod;

// Bisection driven by the 31-point Kronrod / 15-point Gauss difference. The
// library reports that difference in the panel's unit variable, hence the
// rescaling by (b - a) / 2. Each piece must meet `tol` relative to its own L1 norm.
template <class F>
double kronrod(F& f, double a, double b, double tol, int depth) {
    double err = 0.0;
    double l1 = 0.0;
    const double v = gauss_kronrod<double, 31>::integrate(f, a, b, 0, 0.0, &err, &l1);
    err *= 0.5 * (b - a);
    if (err <= std::max(tol * l1, 8.0 * std::numeric_limits<double>::epsilon() * l1)) return v;
    if (depth == 0) {
        throw QuadratureError("Gauss-Kronrod reference integral did not converge on [" + std::to_string(a) + ", " +
                              std::to_string(b) + "]");
    }
    const double mid = 0.5 * (a + b);
    return kronrod(f, a, mid, tol, depth - 1) + kronrod(f, mid, b, tol, depth - 1);
}

std::complex<double> single_bath(const spectral::BathSpec& bath, double u) {
    if (bath.coupling == 0.0) return 0.0;
    const double omega = bath.uv_cutoff;
    const double p = bath.exponent - 2.0;
    auto weight = [&](double w) { return bath.coupling * std::pow(w, p) * std::exp(-(w / omega) * (w / omega)); };
    auto cos_part = [&](double w) { return weight(w) * std::cos(w * u); };
    auto sin_part = [&](double w) { return weight(w) * std::sin(w * u); };

    const double hi = bath.ir_cutoff + 8.0 * omega;
    double lo = bath.ir_cutoff;
    double re = 0.0;
    double im = 0.0;
    if (lo == 0.0) {
        // Integrable endpoint singularity w^(s-2), 1 < s < 2; tanh-sinh handles it.
        const double eps = 1e-6 * omega;
        boost::math::quadrature::tanh_sinh<double> ts;
        re += ts.integrate(cos_part, 0.0, eps);
        im += ts.integrate(sin_part, 0.0, eps);
        lo = eps;
    }
    const double max_width = u > 0.0 ? std::min(0.5 * omega, 0.5 * std::numbers::pi / u) : 0.5 * omega;
    double a = lo;
    double width = lo / 2.0;
    while (a < hi) {
        const double b = std::min(hi, a + std::min(width, max_width));
        re += kronrod(cos_part, a, b, 1e-13, 30);
        im += kronrod(sin_part, a, b, 1e-13, 30);
        a = b;
        width *= 2.0;
    }
    return {re, u == 0.0 ? 0.0 : im};
}

} // namespace

std::complex<double> real_axis_kernel(const spectral::BathSpec& bath1, const spectral::BathSpec& bath2, double u) {
    bath1.validate();
    bath2.validate();
    return single_bath(bath1, u) + single_bath(bath2, u);
}

RateTriple brute_force_rates(const spectral::BathSpec& bath1, const spectral::BathSpec& bath2, double jtilde,
                             double t, double tol) {
    if (!(t >= 0.0)) throw ConfigError("time must be >= 0");
    if (!(jtilde > 0.0)) throw ConfigError("renormalized hopping must be > 0");
    if (t == 0.0) return {};
    const double log_j2 = 2.0 * std::log(jtilde);
    const double j2 = std::exp(log_j2);

    auto outer = [&](auto integrand) {
        try {
            return kronrod(integrand, 0.0, t, tol, 20);
        } catch (const QuadratureError&) {
            throw QuadratureError("tau-form rate integral did not converge at t = " + std::to_string(t));
        }
    };
    // Every evaluation recomputes the kernels at lag t - tau from scratch.
    auto plus = [&](double tau) {
        const auto k = real_axis_kernel(bath1, bath2, t - tau);
        return std::exp(log_j2 + k.real()) * std::cos(k.imag()) - j2;
    };
    auto minus = [&](double tau) {
        const auto k = real_axis_kernel(bath1, bath2, t - tau);
        return std::exp(log_j2 - k.real()) * std::cos(k.imag()) - j2;
    };
    auto shift = [&](double tau) {
        const auto k = real_axis_kernel(bath1, bath2, t - tau);
        return std::exp(log_j2 + k.real()) * std::sin(k.imag());
    };
    return {2.0 * outer(plus), 2.0 * outer(minus), outer(shift)};
}

} // namespace polaronix::oracle
