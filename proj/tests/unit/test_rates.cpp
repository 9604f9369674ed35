// test_rates.cpp — TCL2 rates: reference values, identities and grid convergence

#include <algorithm>
#include <cmath>
#include <vector>

#include <doctest.h>

#include "polaronix/errors.hpp"
#include "polaronix/rates.hpp"
#include "polaronix/spectral.hpp"
#include "reference.hpp"

using namespace polaronix;
using spectral::BathSpec;

namespace {

rates::RateTable pipeline(const BathSpec& a, const BathSpec& b, double dt, double horizon) {
    const auto k = spectral::compute_kernels(a, b, UniformGrid::covering(dt, horizon));
    return rates::compute_rates(k, spectral::renormalized_hopping(1.0, k));
}

} // namespace

TEST_SUITE("rates") {

TEST_CASE("super-Ohmic rates match the high-precision reference") {
    const BathSpec bath{1.0, 2.0, 1.0, 1e-3};
    const auto r = pipeline(bath, bath, 0.01, 3.0);
    CHECK(r.jtilde == doctest::Approx(ref::kSuperOhmicJtilde).epsilon(1e-13));
    for (const auto& v : ref::kSuperOhmicRates) {
        CAPTURE(v.t);
        const std::size_t i = r.time_grid.index_of(v.t);
        CHECK(r.gamma_plus[i] == doctest::Approx(v.gamma_plus).epsilon(1e-8));
        CHECK(r.gamma_minus[i] == doctest::Approx(v.gamma_minus).epsilon(1e-8));
        CHECK(r.zeta[i] == doctest::Approx(v.zeta).epsilon(1e-8));
    }
}

TEST_CASE("rates vanish at t = 0 and composites follow from Gamma_pm") {
    const auto r = pipeline({0.8, 0.5, 1.0, 1e-3}, {1.5, 1.0, 1.0, 1e-3}, 0.01, 5.0);
    CHECK(r.gamma_plus[0] == 0.0);
    CHECK(r.gamma_minus[0] == 0.0);
    CHECK(r.zeta[0] == 0.0);
    const double h = r.time_grid.step();
    double i0 = 0.0;
    double i1 = 0.0;
    double i2 = 0.0;
    for (std::size_t i = 0; i < r.time_grid.size(); ++i) {
        const double gp = r.gamma_plus[i];
        const double gm = r.gamma_minus[i];
        CHECK(r.gamma0[i] == doctest::Approx(gp - 0.5 * gm).epsilon(1e-15));
        CHECK(r.gamma1[i] == doctest::Approx(2.0 * gp + gm).epsilon(1e-15));
        CHECK(r.gamma2[i] == doctest::Approx(4.0 * gp).epsilon(1e-15));
        if (i > 0) {
            i0 += 0.5 * h * (r.gamma0[i] + r.gamma0[i - 1]);
            i1 += 0.5 * h * (r.gamma1[i] + r.gamma1[i - 1]);
            i2 += 0.5 * h * (r.gamma2[i] + r.gamma2[i - 1]);
        }
        CHECK(r.int_gamma0[i] == doctest::Approx(i0).epsilon(1e-12).scale(1e-12));
        CHECK(r.int_gamma1[i] == doctest::Approx(i1).epsilon(1e-12).scale(1e-12));
        CHECK(r.int_gamma2[i] == doctest::Approx(i2).epsilon(1e-12).scale(1e-12));
    }
}

TEST_CASE("zeta jumps shrink with the grid step") {
    auto max_jump = [](double dt) {
        const auto r = pipeline({1.0, 0.5, 1.0, 1e-3}, {1.0, 0.5, 1.0, 1e-3}, dt, 20.0);
        double jump = 0.0;
        for (std::size_t i = 1; i < r.zeta.size(); ++i) jump = std::max(jump, std::abs(r.zeta[i] - r.zeta[i - 1]));
        return jump;
    };
    const double coarse = max_jump(0.01);
    const double fine = max_jump(0.005);
    CHECK(fine < 0.6 * coarse);
}

TEST_CASE("zero coupling gives identically zero rates") {
    const BathSpec zero{0.0, 1.0, 1.0, 1e-3};
    const auto r = pipeline(zero, zero, 0.01, 5.0);
    CHECK(r.jtilde == 1.0);
    for (std::size_t i = 0; i < r.time_grid.size(); ++i) {
        CHECK(r.gamma_plus[i] == 0.0);
        CHECK(r.gamma_minus[i] == 0.0);
        CHECK(r.zeta[i] == 0.0);
        CHECK(r.int_gamma2[i] == 0.0);
    }
}

double sup(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

// At strong coupling Gamma_pm(20) decays to the discretization floor while the
// transient is O(0.1), so the change is measured against the rate's sup norm.
TEST_CASE("halving dt changes Gamma_pm at t = 20 by less than 1e-4 of the rate scale") {
    const std::vector<std::pair<double, double>> pairs{{0.5, 0.5}, {0.5, 1.0}, {0.5, 2.0},
                                                       {1.0, 1.0}, {1.0, 2.0}, {2.0, 2.0}};
    for (auto [s, sp] : pairs) {
        for (double c : {0.1, 1.0, 5.0}) {
            CAPTURE(s);
            CAPTURE(sp);
            CAPTURE(c);
            const auto coarse = pipeline({c, s, 1.0, 1e-3}, {c, sp, 1.0, 1e-3}, 0.01, 20.0);
            const auto fine = pipeline({c, s, 1.0, 1e-3}, {c, sp, 1.0, 1e-3}, 0.005, 20.0);
            CHECK(std::abs(coarse.gamma_plus.back() - fine.gamma_plus.back()) <= 1e-4 * sup(fine.gamma_plus));
            CHECK(std::abs(coarse.gamma_minus.back() - fine.gamma_minus.back()) <= 1e-4 * sup(fine.gamma_minus));
        }
    }
}

TEST_CASE("Gamma_+ integrand dominates Gamma_- where phi_c >= 0 and cos phi_s >= 0") {
    const auto grid = UniformGrid::covering(0.01, 20.0);
    const auto k = spectral::compute_kernels({1.0, 1.0, 1.0, 1e-3}, {1.0, 2.0, 1.0, 1e-3}, grid);
    std::size_t checked = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (k.phi_c[i] < 0.0 || std::cos(k.phi_s[i]) < 0.0) continue;
        const double u = grid.at(i);
        CHECK(rates::bath_correlation(k, u, rates::Sign::Plus).real() >=
              rates::bath_correlation(k, u, rates::Sign::Minus).real());
        ++checked;
    }
    CHECK(checked > 0);
    CHECK_THROWS_AS(rates::bath_correlation(k, 0.005, rates::Sign::Plus), GridError);
}

TEST_CASE("rates on a prefix time grid") {
    const auto k = spectral::compute_kernels({1.0, 1.0, 1.0, 1e-3}, {0.5, 2.0, 1.0, 1e-3},
                                             UniformGrid::covering(0.01, 4.0));
    const double jt = spectral::renormalized_hopping(1.0, k);
    const auto full = rates::compute_rates(k, jt);
    const auto head = rates::compute_rates(k, jt, UniformGrid::covering(0.01, 2.0));
    CHECK(head.time_grid.size() == 201);
    for (std::size_t i = 0; i < head.time_grid.size(); ++i) CHECK(head.gamma_plus[i] == full.gamma_plus[i]);
    CHECK_THROWS_AS(rates::compute_rates(k, jt, UniformGrid::covering(0.02, 2.0)), GridError);
    CHECK_THROWS_AS(rates::compute_rates(k, jt, UniformGrid::covering(0.01, 5.0)), GridError);
}

TEST_CASE("cumulative rules") {
    const double h = 0.1;
    std::vector<double> linear(11), quintic(11);
    auto antiderivative = [](double x) { return x * x * x * x * x * x / 3.0 - x * x * x * x + 0.5 * x * x * x + x; };
    for (std::size_t i = 0; i < 11; ++i) {
        const double x = h * static_cast<double>(i);
        linear[i] = 2.0 * x + 1.0;
        quintic[i] = 2.0 * x * x * x * x * x - 4.0 * x * x * x + 1.5 * x * x + 1.0;
    }
    const auto tl = rates::cumulative_trapezoid(linear, h);
    const auto gq = rates::cumulative_gregory(quintic, h);
    for (std::size_t i = 0; i < 11; ++i) {
        const double x = h * static_cast<double>(i);
        CAPTURE(i);
        CHECK(tl[i] == doctest::Approx(x * x + x).epsilon(1e-14).scale(1e-14));
        CHECK(gq[i] == doctest::Approx(antiderivative(x)).epsilon(1e-13).scale(1e-13));
    }
}

TEST_CASE("Gregory rule converges at high order on a smooth integrand") {
    auto error_at = [](double h) {
        const std::size_t n = static_cast<std::size_t>(std::llround(2.0 / h)) + 1;
        std::vector<double> f(n);
        for (std::size_t i = 0; i < n; ++i) f[i] = std::cos(3.0 * h * static_cast<double>(i));
        double worst = 0.0;
        const auto g = rates::cumulative_gregory(f, h);
        for (std::size_t i = 0; i < n; ++i) {
            worst = std::max(worst, std::abs(g[i] - std::sin(3.0 * h * static_cast<double>(i)) / 3.0));
        }
        return worst;
    };
    const double coarse = error_at(0.04);
    const double fine = error_at(0.02);
    CHECK(coarse < 1e-7);
    CHECK(fine < coarse / 30.0);
}

TEST_CASE("short inputs fall back to lower order") {
    const std::vector<double> two{1.0, 3.0};
    const auto g2 = rates::cumulative_gregory(two, 0.5);
    CHECK(g2[1] == doctest::Approx(1.0));
    const std::vector<double> quadratic{0.0, 1.0, 4.0, 9.0};
    const auto g4 = rates::cumulative_gregory(quadratic, 1.0);
    for (std::size_t i = 0; i < 4; ++i) CHECK(g4[i] == doctest::Approx(std::pow(static_cast<double>(i), 3) / 3.0));
}

}
