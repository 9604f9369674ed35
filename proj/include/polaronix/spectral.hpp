// spectral.hpp — Bath spectral densities, displacement kernels and the dressed hopping
//
// Each site couples to its own bath with J(w) = coupling * w^exponent * exp(-w^2/uv^2).
// The polaron-frame dynamics only see the baths through the two kernels
//
//   phi_c(u) = sum over baths of  int_{ir}^{inf} J(w) cos(w u) / w^2 dw
//   phi_s(u) = sum over baths of  int_{ir}^{inf} J(w) sin(w u) / w^2 dw
//
// and through the renormalized hopping J~ = J exp(-phi_c(0) / 2).

#pragma once

#include <array>
#include <complex>
#include <vector>

#include "polaronix/grid.hpp"
#include "polaronix/quadrature.hpp"

namespace polaronix::spectral {

inline constexpr double kDefaultIrCutoff = 1e-3;

struct BathSpec {
    double coupling{0.0};    // alpha (site 1) or beta (site 2), dimensionless
    double exponent{1.0};    // s: <1 sub-Ohmic, 1 Ohmic, >1 super-Ohmic
    double uv_cutoff{1.0};   // Omega, sets the frequency unit
    double ir_cutoff{kDefaultIrCutoff};  // omega_min, lower integration limit

    // Throws ConfigError on any violated constraint. exponent <= 1 with
    // ir_cutoff == 0 is rejected because int w^(s-2) dw diverges at w -> 0.
    void validate() const;

    bool operator==(const BathSpec&) const = default;
};

double spectral_density(const BathSpec& bath, double omega);

// Kernels sampled on a uniform lag grid. phi_s[0] == 0 exactly.
struct KernelTable {
    UniformGrid lag_grid;
    std::vector<double> phi_c;
    std::vector<double> phi_s;
    std::array<BathSpec, 2> baths{};
};

// Kernels of a single bath at unit coupling. Tables for arbitrary couplings are
// linear combinations of these, which is how sweeps avoid repeating quadrature.
struct UnitKernel {
    UniformGrid lag_grid;
    double exponent{1.0};
    double uv_cutoff{1.0};
    double ir_cutoff{kDefaultIrCutoff};
    std::vector<double> cos_part;
    std::vector<double> sin_part;
};

// int_{ir}^{inf} w^(s-2) exp(-w^2/uv^2) exp(i w u) dw, returned as (cos part, sin part).
//
// The integral is evaluated on a deformed contour: up the line Re w = ir to
// ir + i u uv^2 / 2 (the saddle of the Gaussian-times-phase), then parallel to
// the real axis. Along both legs the integrand no longer oscillates, and the
// horizontal leg carries the exp(-u^2 uv^2 / 4) factor analytically, so results
// keep full relative accuracy even when the kernel is exponentially small.
std::complex<double> unit_kernel_at(double exponent, double ir_cutoff, double uv_cutoff, double u,
                                    const quad::Options& opt = {});

UnitKernel compute_unit_kernel(double exponent, double ir_cutoff, double uv_cutoff,
                               const UniformGrid& lag_grid, unsigned workers = 1);

// phi = c1 * k1 + c2 * k2 pointwise. Both unit kernels must share the lag grid.
KernelTable combine_kernels(const UnitKernel& k1, double c1, const UnitKernel& k2, double c2);

// Validates both baths (and that they share uv_cutoff), then integrates.
KernelTable compute_kernels(const BathSpec& bath1, const BathSpec& bath2, const UniformGrid& lag_grid,
                            unsigned workers = 1);

// phi_c(0) for the pair of baths.
double static_displacement(const BathSpec& bath1, const BathSpec& bath2);

double renormalized_hopping(double hopping, const BathSpec& bath1, const BathSpec& bath2);
double renormalized_hopping(double hopping, const KernelTable& kernels);

struct ModelParams {
    double hopping{1.0};  // bare J
    BathSpec bath1{};
    BathSpec bath2{};

    void validate() const;
    double renormalized_hopping() const { return spectral::renormalized_hopping(hopping, bath1, bath2); }
};

} // namespace polaronix::spectral
