// dynamics.cpp — RK4 and closed-form evolvers

#include "polaronix/dynamics.hpp"

#include <cmath>
#include <string>

#include "polaronix/errors.hpp"

namespace polaronix::dynamics {

void QubitState::validate() const {
    if (!std::isfinite(rho_ss) || !std::isfinite(rho_tt) || !std::isfinite(rho_st.real()) ||
        !std::isfinite(rho_st.imag())) {
        throw ConfigError("initial state entries must be finite");
    }
    if (rho_ss < 0.0 || rho_ss > 1.0 || rho_tt < 0.0 || rho_tt > 1.0) {
        throw ConfigError("initial populations must lie in [0, 1]");
    }
    if (std::abs(trace() - 1.0) > 1e-12) {
        throw ConfigError("initial state must have rho_ss + rho_tt = 1, got " + std::to_string(trace()));
    }
}

QubitState default_initial_state() {
    const double amp_s = std::sqrt(2.0 / 3.0);
    const double amp_t = std::sqrt(1.0 / 3.0);
    return QubitState{2.0 / 3.0, 1.0 / 3.0, {amp_s * amp_t, 0.0}};
}

namespace {

struct Channels {
    double g0;
    double a;   // coefficient of rho_TS
    double b;   // coefficient of rho_ST
};

Channels channels(double gp, double gm) {
    return {(2.0 * gp - gm) / 2.0, (gm + 6.0 * gp) / 2.0, (gm - 2.0 * gp) / 2.0};
}

struct Vec {
    double ss;
    double tt;
    std::complex<double> ts;
};

Vec derivative(const Vec& y, const Channels& c) {
    return {-c.g0 * (y.ss - y.tt), -c.g0 * (y.tt - y.ss), -c.a * y.ts - c.b * std::conj(y.ts)};
}

Vec axpy(const Vec& y, double h, const Vec& k) { return {y.ss + h * k.ss, y.tt + h * k.tt, y.ts + h * k.ts}; }

void check_state(const QubitState& s) { s.validate(); }

Trajectory start(const rates::RateTable& rates) {
    Trajectory traj;
    traj.time_grid = rates.time_grid;
    const std::size_t n = rates.time_grid.size();
    if (rates.gamma_plus.size() != n || rates.gamma_minus.size() != n || rates.int_gamma0.size() != n ||
        rates.int_gamma1.size() != n || rates.int_gamma2.size() != n) {
        throw GridError("rate table arrays do not match its time grid");
    }
    traj.states.reserve(n);
    return traj;
}

void finish(Trajectory& traj) {
    auto [p, c] = observables(traj);
    traj.p_diff = std::move(p);
    traj.coherence = std::move(c);
    for (std::size_t i = 0; i < traj.states.size(); ++i) {
        const double det = traj.states[i].determinant();
        if (det < kPositivityFloor) traj.violations.push_back({traj.time_grid.at(i), det});
    }
}

} // namespace

Trajectory evolve_ode(const QubitState& state0, const rates::RateTable& rates) {
    check_state(state0);
    Trajectory traj = start(rates);
    const double h = rates.time_grid.step();
    Vec y{state0.rho_ss, state0.rho_tt, std::conj(state0.rho_st)};
    traj.states.push_back(state0);
    for (std::size_t i = 0; i + 1 < rates.time_grid.size(); ++i) {
        const Channels c0 = channels(rates.gamma_plus[i], rates.gamma_minus[i]);
        const Channels c1 = channels(rates.gamma_plus[i + 1], rates.gamma_minus[i + 1]);
        const Channels cm = channels(0.5 * (rates.gamma_plus[i] + rates.gamma_plus[i + 1]),
                                     0.5 * (rates.gamma_minus[i] + rates.gamma_minus[i + 1]));
        const Vec k1 = derivative(y, c0);
        const Vec k2 = derivative(axpy(y, 0.5 * h, k1), cm);
        const Vec k3 = derivative(axpy(y, 0.5 * h, k2), cm);
        const Vec k4 = derivative(axpy(y, h, k3), c1);
        y.ss += h / 6.0 * (k1.ss + 2.0 * k2.ss + 2.0 * k3.ss + k4.ss);
        y.tt += h / 6.0 * (k1.tt + 2.0 * k2.tt + 2.0 * k3.tt + k4.tt);
        y.ts += h / 6.0 * (k1.ts + 2.0 * k2.ts + 2.0 * k3.ts + k4.ts);
        traj.states.push_back(QubitState{y.ss, y.tt, std::conj(y.ts)});
    }
    finish(traj);
    return traj;
}

Trajectory evolve_closed_form(const QubitState& state0, const rates::RateTable& rates) {
    check_state(state0);
    Trajectory traj = start(rates);
    const double pd0 = state0.p_diff();
    for (std::size_t i = 0; i < rates.time_grid.size(); ++i) {
        // Population moved from S to T: P_D(0) (1 - exp(-2 int Gamma_0)) / 2.
        const double moved = -0.5 * pd0 * std::expm1(-2.0 * rates.int_gamma0[i]);
        const double re = state0.rho_st.real() * std::exp(-rates.int_gamma1[i]);
        const double im = state0.rho_st.imag() * std::exp(-rates.int_gamma2[i]);
        traj.states.push_back(QubitState{state0.rho_ss - moved, state0.rho_tt + moved, {re, im}});
    }
    finish(traj);
    return traj;
}

std::pair<std::vector<double>, std::vector<double>> observables(const Trajectory& traj) {
    std::vector<double> p(traj.states.size());
    std::vector<double> c(traj.states.size());
    for (std::size_t i = 0; i < traj.states.size(); ++i) {
        p[i] = traj.states[i].p_diff();
        c[i] = traj.states[i].coherence();
    }
    return {std::move(p), std::move(c)};
}

} // namespace polaronix::dynamics
