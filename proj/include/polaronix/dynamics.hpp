// dynamics.hpp — Singlet/triplet density-matrix evolution under the TCL2 rates
//
// In the basis |S/T> = (|10> +- |01>)/sqrt(2) the master equation closes on
//
//   d rho_TT/dt = -Gamma_0 (rho_TT - rho_SS)
//   d rho_SS/dt = -Gamma_0 (rho_SS - rho_TT)
//   d rho_TS/dt = -(Gamma_- + 6 Gamma_+)/2 rho_TS - (Gamma_- - 2 Gamma_+)/2 rho_ST
//
// The Lamb-shift term drops out: (n1 - n2)^2 is the identity on the
// one-fermion sector, so zeta never enters the evolution.

#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "polaronix/grid.hpp"
#include "polaronix/rates.hpp"

namespace polaronix::dynamics {

inline constexpr double kPositivityFloor = -1e-9;

struct QubitState {
    double rho_ss{1.0};
    double rho_tt{0.0};
    std::complex<double> rho_st{0.0, 0.0};  // <S|rho|T>; <T|rho|S> is its conjugate

    double trace() const noexcept { return rho_ss + rho_tt; }
    double p_diff() const noexcept { return rho_ss - rho_tt; }
    double coherence() const noexcept { return 2.0 * std::abs(rho_st); }
    // rho_ss rho_tt - |rho_st|^2; a negative value means rho is not positive.
    double determinant() const noexcept { return rho_ss * rho_tt - std::norm(rho_st); }

    // Throws ConfigError unless entries are finite, populations in [0, 1] and the trace is 1 (1e-12).
    void validate() const;
};

// sqrt(2/3)|S> + sqrt(1/3)|T>.
QubitState default_initial_state();

struct PositivityViolation {
    double time{0.0};
    double determinant{0.0};
};

struct Trajectory {
    UniformGrid time_grid;
    std::vector<QubitState> states;
    std::vector<double> p_diff;
    std::vector<double> coherence;
    std::vector<PositivityViolation> violations;  // determinant below kPositivityFloor; never clipped
};

// Fixed-step RK4 at the rate grid spacing. The half-step rates are the mean of
// the bracketing grid values, so the stepper integrates the rates with exactly
// the trapezoid weights used by the RateTable's cumulative integrals.
Trajectory evolve_ode(const QubitState& state0, const rates::RateTable& rates);

// P_D(t) = P_D(0) exp(-2 int Gamma_0), Re rho_ST(t) = Re rho_ST(0) exp(-int Gamma_1),
// Im rho_ST(t) = Im rho_ST(0) exp(-int Gamma_2).
Trajectory evolve_closed_form(const QubitState& state0, const rates::RateTable& rates);

// (p_diff, coherence) recomputed from the states.
std::pair<std::vector<double>, std::vector<double>> observables(const Trajectory& traj);

} // namespace polaronix::dynamics
