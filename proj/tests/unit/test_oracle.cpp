// test_oracle.cpp — Discrete-mode sums, real-axis kernels and tau-form rates

#include <algorithm>
#include <cmath>
#include <numbers>

#include <doctest.h>

#include "polaronix/oracle.hpp"
#include "polaronix/spectral.hpp"
#include "reference.hpp"

using namespace polaronix;
using spectral::BathSpec;

namespace {

oracle::DiscreteBath single_mode(double w, double weight) { return {{w}, {weight}, {}}; }

oracle::DiscreteBath empty_bath() { return {}; }

// max |a - b| / max |b| over both kernels.
double sup_discrepancy(const spectral::KernelTable& a, const spectral::KernelTable& b) {
    double diff = 0.0;
    double scale = 0.0;
    for (std::size_t i = 0; i < b.phi_c.size(); ++i) {
        diff = std::max({diff, std::abs(a.phi_c[i] - b.phi_c[i]), std::abs(a.phi_s[i] - b.phi_s[i])});
        scale = std::max({scale, std::abs(b.phi_c[i]), std::abs(b.phi_s[i])});
    }
    return diff / scale;
}

} // namespace

TEST_SUITE("oracle") {

TEST_CASE("single-mode sums") {
    const auto k0 = oracle::discrete_kernels(single_mode(1.0, 1.0), empty_bath(), UniformGrid(1.0, 1));
    CHECK(k0.phi_c[0] == 1.0);
    CHECK(k0.phi_s[0] == 0.0);
    const auto k1 = oracle::discrete_kernels(single_mode(2.0, 1.0), empty_bath(), UniformGrid(std::numbers::pi / 2.0, 2));
    CHECK(k1.phi_c[1] == doctest::Approx(-0.25).epsilon(1e-14));
    CHECK(std::abs(k1.phi_s[1]) < 1e-15);
}

TEST_CASE("discretization uses cell midpoints and J(w) dw weights") {
    const BathSpec bath{2.0, 0.5, 1.0, 1e-3};
    const auto db = oracle::discretize(bath, 100, 6.0);
    REQUIRE(db.mode_freqs.size() == 100);
    const double dw = (6.0 - 1e-3) / 100.0;
    CHECK(db.mode_freqs.front() == doctest::Approx(1e-3 + 0.5 * dw).epsilon(1e-14));
    CHECK(db.mode_freqs.back() < 6.0);
    CHECK(std::is_sorted(db.mode_freqs.begin(), db.mode_freqs.end()));
    for (std::size_t k = 0; k < 100; ++k) {
        CHECK(db.mode_weights[k] == doctest::Approx(spectral::spectral_density(bath, db.mode_freqs[k]) * dw).epsilon(1e-14));
    }
}

TEST_CASE("total discrete weight converges to the integral of J") {
    const BathSpec bath{1.0, 1.0, 1.0, 1e-3};
    // int_{ir}^{inf} w exp(-w^2) dw = exp(-ir^2) / 2
    const double exact = 0.5 * std::exp(-1e-6);
    for (std::size_t k : {1000u, 10000u}) {
        const auto db = oracle::discretize(bath, k, 8.0);
        double total = 0.0;
        for (double w : db.mode_weights) total += w;
        CHECK(std::abs(total - exact) < 10.0 / static_cast<double>(k * k));
    }
}

TEST_CASE("Ohmic discrete kernels match the quadrature kernels at K = 20000") {
    const BathSpec bath{1.0, 1.0, 1.0, 1e-3};
    const auto grid = UniformGrid::covering(0.05, 20.0);
    const auto db = oracle::discretize(bath, 20000, 6.0);
    const BathSpec none{0.0, 1.0, 1.0, 1e-3};
    const auto discrete = oracle::discrete_kernels(db, oracle::discretize(none, 1, 6.0), grid);
    const auto quad = spectral::compute_kernels(bath, none, grid);
    CHECK(sup_discrepancy(discrete, quad) <= 1e-3);
}

TEST_CASE("doubling the mode count at least halves the super-Ohmic discrepancy") {
    const BathSpec bath{1.0, 2.0, 1.0, 1e-3};
    const BathSpec none{0.0, 2.0, 1.0, 1e-3};
    const auto grid = UniformGrid::covering(0.05, 20.0);
    const auto quad = spectral::compute_kernels(bath, none, grid);
    double previous = 0.0;
    for (std::size_t k : {5000u, 10000u, 20000u}) {
        const auto discrete =
            oracle::discrete_kernels(oracle::discretize(bath, k, 6.0), oracle::discretize(none, 1, 6.0), grid);
        const double d = sup_discrepancy(discrete, quad);
        if (previous > 0.0) CHECK(d <= 0.5 * previous);
        previous = d;
    }
}

TEST_CASE("real-axis kernel against high-precision values") {
    for (const auto& r : ref::kUnitKernel) {
        CAPTURE(r.s);
        CAPTURE(r.ir);
        CAPTURE(r.u);
        const auto v = oracle::real_axis_kernel({1.0, r.s, 1.0, r.ir}, {0.0, r.s, 1.0, r.ir}, r.u);
        CHECK(v.real() == doctest::Approx(r.cos_part).epsilon(1e-9));
        CHECK(v.imag() == doctest::Approx(r.sin_part).epsilon(1e-9).scale(1e-11));
    }
}

TEST_CASE("tau-form rates") {
    const BathSpec bath{1.0, 2.0, 1.0, 1e-3};
    const auto at0 = oracle::brute_force_rates(bath, bath, ref::kSuperOhmicJtilde, 0.0);
    CHECK(at0.gamma_plus == 0.0);
    CHECK(at0.gamma_minus == 0.0);
    CHECK(at0.zeta == 0.0);
    const BathSpec zero{0.0, 0.5, 1.0, 1e-3};
    const auto z = oracle::brute_force_rates(zero, zero, 1.0, 3.0);
    CHECK(z.gamma_plus == 0.0);
    CHECK(z.gamma_minus == 0.0);
    CHECK(z.zeta == 0.0);
    const auto& v = ref::kSuperOhmicRates[0];
    const auto r = oracle::brute_force_rates(bath, bath, ref::kSuperOhmicJtilde, v.t);
    CHECK(r.gamma_plus == doctest::Approx(v.gamma_plus).epsilon(1e-9));
    CHECK(r.gamma_minus == doctest::Approx(v.gamma_minus).epsilon(1e-9));
    CHECK(r.zeta == doctest::Approx(v.zeta).epsilon(1e-9));
}

}
