// spectral.cpp — Spectral densities and contour quadrature for the bath kernels

#include "polaronix/spectral.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "polaronix/errors.hpp"
#include "polaronix/parallel.hpp"

namespace polaronix::spectral {

namespace {

using cplx = std::complex<double>;

// exp(-x^2) at x = 8 is 1.6e-28; nothing beyond contributes at double precision.
constexpr double kUpper = 8.0;

cplx power(cplx w, double p) {
    if (p == 0.0) return 1.0;
    return std::exp(p * std::log(w));
}

bool finite(double x) { return std::isfinite(x); }

// Kernel in units where the UV cutoff is 1.
cplx scaled_kernel(double s, double a, double u, const quad::Options& opt) {
    const double p = s - 2.0;
    // With a == 0 and 1 < s < 2 the integrand is (i y)^p near the origin; the
    // substitution y = Y w^q, q = 1/(s-1), makes the Jacobian cancel it exactly.
    const bool singular = (a == 0.0 && p < 0.0);
    const double q = singular ? 1.0 / (s - 1.0) : 1.0;
    const double upper = a + kUpper;

    if (u == 0.0) {
        if (singular) {
            const double w_hi = std::pow(upper, 1.0 / q);
            auto f = [q](double w) { return q * std::exp(-std::pow(w, 2.0 * q)); };
            const auto breaks = quad::cap_width({0.0, w_hi}, 0.25);
            return {quad::integrate_panels(f, breaks, opt), 0.0};
        }
        auto f = [p](double x) { return (p == 0.0 ? 1.0 : std::pow(x, p)) * std::exp(-x * x); };
        const auto breaks = quad::cap_width(quad::geometric_breaks(a, upper, a > 0.0 ? a / 4.0 : 0.25), 0.5);
        return {quad::integrate_panels(f, breaks, opt), 0.0};
    }

    const double height = 0.5 * u;  // saddle of -w^2 + i w u sits at w = i u / 2
    const cplx i_unit(0.0, 1.0);

    // Vertical leg w = a + i y, y in [0, height]. Exponent -w^2 + i w u expanded
    // by hand so that no large cancelling terms are formed.
    cplx vertical;
    const double near_scale = std::min(a > 0.0 ? a : height, 1.0 / u);
    auto y_breaks = quad::cap_width(quad::geometric_breaks(0.0, height, near_scale / 4.0), 0.5);
    if (singular) {
        const cplx prefactor = i_unit * std::exp(i_unit * (0.5 * std::numbers::pi * p)) * std::pow(height, s - 1.0) * q;
        auto g = [&](double w) {
            const double y = height * std::pow(w, q);
            return prefactor * std::exp(y * y - y * u);
        };
        for (double& b : y_breaks) b = std::pow(b / height, 1.0 / q);
        y_breaks.back() = 1.0;
        vertical = quad::integrate_panels(g, y_breaks, opt);
    } else {
        auto g = [&](double y) {
            const cplx w(a, y);
            return i_unit * power(w, p) * std::exp(cplx(y * y - y * u - a * a, a * (u - 2.0 * y)));
        };
        vertical = quad::integrate_panels(g, y_breaks, opt);
    }

    // Horizontal leg w = x + i height: -w^2 + i w u = -x^2 - u^2/4 exactly.
    auto h = [&](double x) { return power(cplx(x, height), p) * std::exp(-x * x); };
    const double start_scale = std::min(std::max(a, height), 1.0);
    const auto x_breaks = quad::cap_width(quad::geometric_breaks(a, upper, start_scale / 4.0), 0.5);
    const cplx horizontal = quad::integrate_panels(h, x_breaks, opt);

    return vertical + std::exp(-0.25 * u * u) * horizontal;
}

double combined(double c1, double v1, double c2, double v2) { return c1 * v1 + c2 * v2; }

} // namespace

void BathSpec::validate() const {
    if (!finite(coupling) || coupling < 0.0) {
        throw ConfigError("bath coupling must be finite and >= 0, got " + std::to_string(coupling));
    }
    if (!finite(exponent) || !(exponent > 0.0)) {
        throw ConfigError("bath exponent must be finite and > 0, got " + std::to_string(exponent));
    }
    if (!finite(uv_cutoff) || !(uv_cutoff > 0.0)) {
        throw ConfigError("UV cutoff Omega must be finite and > 0, got " + std::to_string(uv_cutoff));
    }
    if (!finite(ir_cutoff) || ir_cutoff < 0.0 || !(ir_cutoff < uv_cutoff)) {
        throw ConfigError("infrared cutoff omega_min must satisfy 0 <= omega_min < Omega, got " +
                          std::to_string(ir_cutoff));
    }
    if (exponent <= 1.0 && ir_cutoff == 0.0) {
        throw ConfigError("infrared cutoff omega_min must be > 0 for exponent s = " + std::to_string(exponent) +
                          " <= 1: the kernel integral of w^(s-2) diverges at w -> 0");
    }
}

double spectral_density(const BathSpec& bath, double omega) {
    if (omega <= 0.0) return 0.0;
    const double x = omega / bath.uv_cutoff;
    return bath.coupling * std::pow(omega, bath.exponent) * std::exp(-x * x);
}

cplx unit_kernel_at(double exponent, double ir_cutoff, double uv_cutoff, double u, const quad::Options& opt) {
    const cplx scaled = scaled_kernel(exponent, ir_cutoff / uv_cutoff, u * uv_cutoff, opt);
    return std::pow(uv_cutoff, exponent - 1.0) * scaled;
}

UnitKernel compute_unit_kernel(double exponent, double ir_cutoff, double uv_cutoff, const UniformGrid& lag_grid,
                               unsigned workers) {
    BathSpec{1.0, exponent, uv_cutoff, ir_cutoff}.validate();
    UnitKernel out{lag_grid, exponent, uv_cutoff, ir_cutoff, std::vector<double>(lag_grid.size()),
                   std::vector<double>(lag_grid.size())};
    parallel_for(lag_grid.size(), workers, [&](std::size_t i) {
        const cplx v = unit_kernel_at(exponent, ir_cutoff, uv_cutoff, lag_grid.at(i));
        out.cos_part[i] = v.real();
        out.sin_part[i] = i == 0 ? 0.0 : v.imag();
    });
    return out;
}

KernelTable combine_kernels(const UnitKernel& k1, double c1, const UnitKernel& k2, double c2) {
    if (!(k1.lag_grid == k2.lag_grid)) throw GridError("unit kernels are sampled on different lag grids");
    KernelTable out;
    out.lag_grid = k1.lag_grid;
    out.baths = {BathSpec{c1, k1.exponent, k1.uv_cutoff, k1.ir_cutoff},
                 BathSpec{c2, k2.exponent, k2.uv_cutoff, k2.ir_cutoff}};
    const std::size_t n = out.lag_grid.size();
    out.phi_c.resize(n);
    out.phi_s.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.phi_c[i] = combined(c1, k1.cos_part[i], c2, k2.cos_part[i]);
        out.phi_s[i] = combined(c1, k1.sin_part[i], c2, k2.sin_part[i]);
    }
    return out;
}

namespace {

void check_pair(const BathSpec& bath1, const BathSpec& bath2) {
    bath1.validate();
    bath2.validate();
    if (bath1.uv_cutoff != bath2.uv_cutoff) {
        throw ConfigError("both baths must share the same UV cutoff Omega");
    }
}

UnitKernel zero_unit(const BathSpec& b, const UniformGrid& grid) {
    return UnitKernel{grid, b.exponent, b.uv_cutoff, b.ir_cutoff, std::vector<double>(grid.size(), 0.0),
                      std::vector<double>(grid.size(), 0.0)};
}

bool same_shape(const BathSpec& a, const BathSpec& b) {
    return a.exponent == b.exponent && a.uv_cutoff == b.uv_cutoff && a.ir_cutoff == b.ir_cutoff;
}

} // namespace

KernelTable compute_kernels(const BathSpec& bath1, const BathSpec& bath2, const UniformGrid& lag_grid,
                            unsigned workers) {
    check_pair(bath1, bath2);
    auto unit_for = [&](const BathSpec& b) {
        if (b.coupling == 0.0) return zero_unit(b, lag_grid);
        return compute_unit_kernel(b.exponent, b.ir_cutoff, b.uv_cutoff, lag_grid, workers);
    };
    const UnitKernel k1 = unit_for(bath1);
    const UnitKernel k2 = (bath2.coupling != 0.0 && bath1.coupling != 0.0 && same_shape(bath1, bath2))
                              ? k1
                              : unit_for(bath2);
    return combine_kernels(k1, bath1.coupling, k2, bath2.coupling);
}

double static_displacement(const BathSpec& bath1, const BathSpec& bath2) {
    check_pair(bath1, bath2);
    auto at_zero = [](const BathSpec& b) {
        if (b.coupling == 0.0) return 0.0;
        return unit_kernel_at(b.exponent, b.ir_cutoff, b.uv_cutoff, 0.0).real();
    };
    return combined(bath1.coupling, at_zero(bath1), bath2.coupling, at_zero(bath2));
}

namespace {
void check_hopping(double hopping) {
    if (!finite(hopping) || !(hopping > 0.0)) {
        throw ConfigError("bare hopping J must be finite and > 0, got " + std::to_string(hopping));
    }
}

double dressed(double hopping, double phi0) {
    const double jt = hopping * std::exp(-0.5 * phi0);
    if (!(jt > 0.0) || !std::isfinite(jt)) {
        throw Error("renormalized hopping J exp(-phi_c(0)/2) is not representable (phi_c(0) = " +
                    std::to_string(phi0) + ")");
    }
    return jt;
}
} // namespace

double renormalized_hopping(double hopping, const BathSpec& bath1, const BathSpec& bath2) {
    check_hopping(hopping);
    return dressed(hopping, static_displacement(bath1, bath2));
}

double renormalized_hopping(double hopping, const KernelTable& kernels) {
    check_hopping(hopping);
    return dressed(hopping, kernels.phi_c.at(0));
}

void ModelParams::validate() const {
    check_hopping(hopping);
    check_pair(bath1, bath2);
}

} // namespace polaronix::spectral
