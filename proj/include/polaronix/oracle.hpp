// oracle.hpp — Brute-force references for the kernel and rate pipelines
//
// Nothing here shares code paths with spectral/rates beyond the BathSpec type:
// kernels are either summed over an explicit discrete mode set or integrated
// along the real frequency axis, and rates are nested adaptive integrals in the
// original tau variable. Slow by construction; used for cross-checks only.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "polaronix/grid.hpp"
#include "polaronix/spectral.hpp"

namespace polaronix::oracle {

struct DiscreteBath {
    std::vector<double> mode_freqs;    // ascending
    std::vector<double> mode_weights;  // |g_k|^2
    spectral::BathSpec source{};       // continuum bath it was sampled from, if any
};

// `modes` frequencies at the cell midpoints of a uniform partition of
// [ir_cutoff, omega_max] with weights J(w_k) * dw.
DiscreteBath discretize(const spectral::BathSpec& bath, std::size_t modes, double omega_max);

// Exact mode sums: phi_c(u) = sum_k w_k cos(w_k u) / w_k^2 over both baths.
spectral::KernelTable discrete_kernels(const DiscreteBath& bath1, const DiscreteBath& bath2,
                                       const UniformGrid& lag_grid);

// (phi_c(u), phi_s(u)) by adaptive Gauss–Kronrod along the real axis, with
// panels no wider than a quarter period of cos(w u).
std::complex<double> real_axis_kernel(const spectral::BathSpec& bath1, const spectral::BathSpec& bath2, double u);

struct RateTriple {
    double gamma_plus{0.0};
    double gamma_minus{0.0};
    double zeta{0.0};
};

// Gamma_+-(t) and zeta(t) from the tau-form double integral, re-running the
// real-axis kernel quadrature at every tau node. Throws QuadratureError when
// the outer integral misses `tol`.
RateTriple brute_force_rates(const spectral::BathSpec& bath1, const spectral::BathSpec& bath2, double jtilde,
                             double t, double tol = 1e-11);

} // namespace polaronix::oracle
