// rates.hpp — Time-local TCL2 rates of the dressed qubit
//
// With u = t - tau every rate is a running integral over the lag,
//
//   Gamma_pm(t) = 2 J~^2 int_0^t [exp(+-phi_c(u)) cos(phi_s(u)) - 1] du
//   zeta(t)     =   J~^2 int_0^t  exp(phi_c(u)) sin(phi_s(u)) du
//
// so one pass over the kernel table yields the rates at every grid time.

#pragma once

#include <complex>
#include <span>
#include <vector>

#include "polaronix/grid.hpp"
#include "polaronix/spectral.hpp"

namespace polaronix::rates {

enum class Sign { Plus, Minus };

struct RateTable {
    UniformGrid time_grid;
    std::vector<double> gamma_plus;
    std::vector<double> gamma_minus;
    std::vector<double> zeta;
    std::vector<double> gamma0;   // (2 Gamma_+ - Gamma_-) / 2, population channel
    std::vector<double> gamma1;   // 2 Gamma_+ + Gamma_-, Re rho_ST channel
    std::vector<double> gamma2;   // 4 Gamma_+, Im rho_ST channel
    std::vector<double> int_gamma0;
    std::vector<double> int_gamma1;
    std::vector<double> int_gamma2;
    double jtilde{1.0};
};

// exp(sigma (phi_c(u) + i sigma phi_s(u))) - 1: the vacuum correlation of the
// displaced bath operators. Its real part is the Gamma_sigma integrand without
// the J~^2 prefactor. u must be a point of the kernel lag grid.
std::complex<double> bath_correlation(const spectral::KernelTable& kernels, double u, Sign sign);

// Rates on the kernel lag grid itself.
RateTable compute_rates(const spectral::KernelTable& kernels, double jtilde);

// Rates on `time_grid`, which must share the lag spacing and not extend past
// the kernel table (GridError otherwise).
RateTable compute_rates(const spectral::KernelTable& kernels, double jtilde, const UniformGrid& time_grid);

// Fills the composite channels and their integrals from Gamma_+, Gamma_-, zeta.
RateTable assemble_rates(UniformGrid time_grid, std::vector<double> gamma_plus, std::vector<double> gamma_minus,
                         std::vector<double> zeta, double jtilde);

std::vector<double> cumulative_trapezoid(std::span<const double> f, double h);

// Cumulative Gregory rule with end corrections through fifth differences;
// exact for quintics once five steps are available. The first few outputs
// integrate the quintic through the leading samples instead. Only grid samples
// are used, and short inputs fall back to lower order.
std::vector<double> cumulative_gregory(std::span<const double> f, double h);

} // namespace polaronix::rates
