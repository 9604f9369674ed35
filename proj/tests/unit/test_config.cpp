// test_config.cpp — INI parsing, validation, round-trip and presets

#include <sstream>
#include <string>

#include <doctest.h>

#include "polaronix/config.hpp"
#include "polaronix/errors.hpp"
#include "polaronix/presets.hpp"

using namespace polaronix;

namespace {

config::RunConfig parse_text(const std::string& text) {
    std::istringstream is(text);
    return config::parse(is);
}

std::string error_of(const std::string& text) {
    try {
        parse_text(text);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_SUITE("config") {

TEST_CASE("defaults") {
    const auto c = parse_text("");
    CHECK(c.model.hopping == 1.0);
    CHECK(c.model.uv_cutoff == 1.0);
    CHECK(c.model.ir_cutoff == 1e-3);
    CHECK(c.grid.dt == 0.01);
    CHECK(c.grid.t_max == 20.0);
    CHECK(c.sweep.alpha.count == 32);
    CHECK(c.sweep.horizon == 20.0);
    CHECK(c.time_grid().size() == 2001);
    CHECK(c.initial.rho_ss == dynamics::default_initial_state().rho_ss);
}

TEST_CASE("all sections parse") {
    const auto c = parse_text(R"(
[model]
J = 0.5
omega = 2
omega_min = 0.002
[bath1]
coupling = 1.5
exponent = 0.5
[bath2]
coupling = 0.25
exponent = 2
[grid]
dt = 0.02
t_max = 10
[initial_state]
rho_ss = 0.75
rho_tt = 0.25
re_rho_st = 0.1
im_rho_st = -0.2
[sweep]
alpha_min = 0
alpha_max = 2
alpha_n = 5
beta_min = 1
beta_max = 1
beta_n = 1
horizon = 4
[output]
dir = results/run1
prefix = a_
)");
    CHECK(c.model.hopping == 0.5);
    CHECK(c.model.uv_cutoff == 2.0);
    CHECK(c.bath1.exponent == 0.5);
    CHECK(c.bath2.coupling == 0.25);
    CHECK(c.grid.dt == 0.02);
    CHECK(c.initial.rho_st == std::complex<double>(0.1, -0.2));
    CHECK(c.sweep.alpha.count == 5);
    CHECK(c.output.dir == "results/run1");
    CHECK(c.output.prefix == "a_");
    const auto spec = c.sweep_spec(2);
    CHECK(spec.alpha_grid == std::vector<double>{0.0, 0.5, 1.0, 1.5, 2.0});
    CHECK(spec.beta_grid == std::vector<double>{1.0});
    CHECK(spec.meta.uv_cutoff == 2.0);
    CHECK(spec.s == 0.5);
    CHECK(spec.s_prime == 2.0);
    CHECK(spec.workers == 2);
}

TEST_CASE("comments") {
    const auto c = parse_text("; leading\n[model]\nJ = 0.5   ; bare hopping\n# note\n[bath1]\ncoupling = 2\t# alpha\n"
                              "[output]\nprefix =   ; none\n");
    CHECK(c.model.hopping == 0.5);
    CHECK(c.bath1.coupling == 2.0);
    CHECK(c.output.prefix.empty());
    CHECK(error_of("[model]\nJ = 0.5;1\n").find("model.J") != std::string::npos);
}

TEST_CASE("to_ini round-trips exactly") {
    config::RunConfig c;
    c.model.hopping = 1.0 / 3.0;
    c.bath1 = {0.7, 0.5};
    c.bath2 = {1e-5, 1.5};
    c.initial = {0.6, 0.4, {0.1, 0.3}};
    c.output.prefix = "x";
    const auto back = parse_text(config::to_ini(c));
    CHECK(back.model.hopping == c.model.hopping);
    CHECK(back.bath1.coupling == c.bath1.coupling);
    CHECK(back.bath2.coupling == c.bath2.coupling);
    CHECK(back.initial.rho_st == c.initial.rho_st);
    CHECK(back.output.prefix == "x");
    CHECK(config::to_ini(back) == config::to_ini(c));
}

TEST_CASE("validation errors name the field") {
    CHECK(error_of("[model]\nomega_min = 0\n[bath1]\nexponent = 0.5\n").find("infrared") != std::string::npos);
    CHECK(error_of("[grid]\ndt = 0.03\nt_max = 1\n").find("t_max") != std::string::npos);
    CHECK(error_of("[grid]\ndt = -1\n").find("dt") != std::string::npos);
    CHECK(error_of("[bath1]\ncoupling = -1\n").find("coupling") != std::string::npos);
    CHECK(error_of("[bath1]\ncoupling = abc\n").find("bath1.coupling") != std::string::npos);
    CHECK(error_of("[bath1]\ncoupling = 1x\n").find("bath1.coupling") != std::string::npos);
    CHECK(error_of("[bath1]\nstrength = 1\n").find("bath1.strength") != std::string::npos);
    CHECK(error_of("[bath3]\ncoupling = 1\n").find("bath3") != std::string::npos);
    CHECK(error_of("J = 1\n").find("inside a section") != std::string::npos);
    CHECK(error_of("[sweep]\nalpha_n = 0\n").find("alpha_n") != std::string::npos);
    CHECK(error_of("[sweep]\nalpha_n = 2.5\n").find("alpha_n") != std::string::npos);
    CHECK(error_of("[sweep]\nbeta_min = 3\nbeta_max = 1\n").find("beta_max") != std::string::npos);
    CHECK(error_of("[sweep]\nhorizon = 3.005\n").find("horizon") != std::string::npos);
    CHECK(error_of("[initial_state]\nrho_ss = 0.9\n").find("rho_tt") != std::string::npos);
    CHECK(error_of("[model]\nJ = 0\n").find("J") != std::string::npos);
    CHECK(error_of("[model\nJ = 1\n").find("malformed") != std::string::npos);
    CHECK_THROWS_AS(config::load("/nonexistent/run.ini"), ConfigError);
}

TEST_CASE("preset table") {
    for (const char* name : {"fig2", "fig3", "fig4", "fig6", "fig7", "fig8", "fig9", "fig1", "fig5", "fig5a", "fig5f"}) {
        CHECK(presets::find(name).has_value());
    }
    CHECK_FALSE(presets::find("fig12").has_value());
    const auto fig2 = *presets::find("fig2");
    CHECK(fig2.kind == presets::Kind::Trajectory);
    REQUIRE(fig2.cases.size() == 3);
    CHECK(fig2.cases[0].s == 2.0);
    CHECK(fig2.cases[0].s_prime == 2.0);
    const auto strong = *presets::find("fig2-strong");
    REQUIRE(strong.cases.size() == 1);
    CHECK(strong.cases[0].alpha == 5.0);
    CHECK(strong.cases[0].beta == 5.0);
    const auto weak = presets::apply(fig2, fig2.cases[2], config::RunConfig{});
    CHECK(weak.bath1.coupling == 0.1);
    CHECK(weak.bath2.exponent == 2.0);
    const auto fig5 = *presets::find("fig5");
    CHECK(fig5.kind == presets::Kind::Sweep);
    CHECK(fig5.cases.size() == 6);
    const auto panel = *presets::find("fig5c");
    CHECK(panel.cases.at(0).s == 0.5);
    CHECK(panel.cases.at(0).s_prime == 2.0);
    const auto sweep_cfg = presets::apply(panel, panel.cases[0], config::RunConfig{});
    CHECK(sweep_cfg.sweep.alpha.count == 32);
    CHECK(sweep_cfg.sweep.alpha.min == 0.1);
    CHECK(sweep_cfg.sweep.beta.max == 5.0);
    CHECK(presets::find("fig1")->sweep_points == 10);
    const auto fig9 = *presets::find("fig9");
    CHECK(fig9.cases.size() == 4);
    CHECK(fig9.cases[0].alpha != fig9.cases[0].beta);
}

}
