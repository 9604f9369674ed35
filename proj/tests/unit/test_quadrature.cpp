// test_quadrature.cpp — Adaptive Gauss–Legendre panels

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "polaronix/errors.hpp"
#include "polaronix/quadrature.hpp"

namespace quad = polaronix::quad;

TEST_SUITE("quadrature") {

TEST_CASE("smooth integrals to near machine precision") {
    CHECK(quad::integrate([](double x) { return std::exp(-x * x); }, 0.0, 8.0) ==
          doctest::Approx(std::sqrt(std::numbers::pi) / 2.0).epsilon(1e-14));
    CHECK(quad::integrate([](double x) { return std::cos(x); }, 0.0, std::numbers::pi / 2.0) ==
          doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("complex integrands") {
    const auto v = quad::integrate([](double x) { return std::exp(std::complex<double>(0.0, x)); }, 0.0,
                                   std::numbers::pi);
    CHECK(v.real() == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
    CHECK(v.imag() == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("sharp endpoint peak resolved by geometric panels") {
    const auto breaks = quad::geometric_breaks(0.0, 1.0, 1e-7);
    const double v = quad::integrate_panels([](double x) { return 1.0 / (x + 1e-6); },
                                            std::span<const double>(breaks));
    CHECK(v == doctest::Approx(std::log1p(1e6)).epsilon(1e-13));
}

TEST_CASE("breakpoint helpers") {
    const auto g = quad::geometric_breaks(1.0, 2.0, 0.125);
    CHECK(g.front() == 1.0);
    CHECK(g.back() == 2.0);
    for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] > g[i - 1]);
    const auto c = quad::cap_width({0.0, 1.0, 5.0}, 0.5);
    CHECK(c.front() == 0.0);
    CHECK(c.back() == 5.0);
    for (std::size_t i = 1; i < c.size(); ++i) CHECK(c[i] - c[i - 1] <= 0.5 + 1e-15);
}

TEST_CASE("non-convergence is reported") {
    quad::Options opt;
    opt.max_depth = 2;
    CHECK_THROWS_AS(quad::integrate([](double x) { return std::sin(1.0 / (x + 1e-9)); }, 0.0, 1.0, opt),
                    polaronix::QuadratureError);
    CHECK_THROWS_AS(quad::integrate([](double x) { return 1.0 / x; }, 0.0, 1.0), polaronix::QuadratureError);
}

}
