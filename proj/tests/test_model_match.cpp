#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "localsyn/errors.hpp"
#include "localsyn/model_match.hpp"

#include "helpers.hpp"

using namespace localsyn;

// independently derived reference costs at the default parameters, T = 60
namespace ref {
constexpr double J1 = 31.729443159698;
constexpr double J2 = 31.452621015119;
constexpr double J3 = 31.419119923311;
} // namespace ref

TEST_CASE("solver reproduces reference costs for both parameterizations") {
    const PlantParams p{};
    SolverConfig cfg;
    cfg.theta_grid = 128;
    for (const auto& [E, want] : {std::pair{1, ref::J1}, {2, ref::J2}}) {
        const SynthesisResult sl = solve_finite_extent(p, E, cfg, Param::sl);
        const SynthesisResult io = solve_finite_extent(p, E, cfg, Param::io);
        CHECK(std::abs(sl.J - want) / want < 1e-10);
        CHECK(std::abs(io.J - want) / want < 1e-10);
        CHECK(std::abs(sl.J - io.J) / sl.J < 1e-10);
        CHECK(sl.residual_gradient_norm < 1e-9);
        CHECK(std::abs(sl.J - sl.J_freq_check) / sl.J < 1e-8);
    }
}

TEST_CASE("solution taps stay within the declared parameter shape") {
    const PlantParams p{};
    SolverConfig cfg;
    cfg.horizon_T = 30;
    cfg.theta_grid = 128;
    const SynthesisResult r = solve_finite_extent(p, 2, cfg, Param::sl);
    CHECK(r.f.extent == 2);
    CHECK(r.E == 2);
    CHECK(r.T == 30);
    for (int k = -2; k <= 2; ++k) {
        CHECK(r.f.at(k).lowest_power() >= 0);
        CHECK(r.f.at(k).highest_power() <= 30);
    }
    // the closed-loop maps at the solution are causal
    CHECK(causal_check(r.maps_sl.l, 1e-9).ok);
    CHECK(causal_check(r.maps_sl.n1, 1e-9, true).ok);
}

TEST_CASE("cost_of evaluates an arbitrary parameter consistently") {
    const PlantParams p{};
    SolverConfig cfg;
    cfg.horizon_T = 25;
    cfg.theta_grid = 128;
    const SynthesisResult r = solve_finite_extent(p, 1, cfg, Param::sl);
    const double again = cost_of(p, r.f, cfg, Param::sl);
    CHECK(std::abs(again - r.J) / r.J < 1e-12);
    // any other parameter does worse
    auto g = test_helpers::rng(51);
    const ExtentVector other = test_helpers::random_fir(g, 1, 26);
    CHECK(cost_of(p, other, cfg, Param::sl) > r.J);
}

TEST_CASE("per-frequency kernel matches reference values") {
    const PlantParams p{};
    CHECK(std::abs(solve_theta(p, 0.0, 120).cost_sq - 4570.890578416930) < 1e-6);
    CHECK(std::abs(solve_theta(p, 1.0, 120).cost_sq - 811.368056296194) < 1e-8);
    CHECK(std::abs(solve_theta(p, std::numbers::pi, 120).cost_sq - 4.592813748196) < 1e-9);
}

TEST_CASE("sweep rows are ordered, complete and reuse the oracle value") {
    const PlantParams p{};
    SolverConfig cfg;
    cfg.horizon_T = 30;
    cfg.theta_grid = 128;
    const std::vector<SweepRow> rows = sweep(p, {1, 2, 3}, cfg, Param::both, 31.410804339270);
    REQUIRE(rows.size() == 3);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].E == int(i) + 1);
        CHECK(rows[i].status == "ok");
        CHECK(rows[i].T_used == 30);
        CHECK(rows[i].gap_sl == doctest::Approx(rows[i].J_sl - 31.410804339270).epsilon(1e-12));
    }
    CHECK(rows[0].J_sl > rows[1].J_sl);
    CHECK(rows[1].J_sl > rows[2].J_sl);
}

TEST_CASE("horizon refinement is monotone and settles") {
    const PlantParams p{};
    SolverConfig cfg;
    cfg.theta_grid = 128;
    const std::vector<HorizonRow> rows =
        horizon_convergence(p, 3, {15, 30, 60}, cfg, Param::sl);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].J >= rows[1].J);
    CHECK(rows[1].J >= rows[2].J);
    CHECK(std::abs(rows[2].J - ref::J3) / ref::J3 < 1e-10);
    CHECK(rows[2].rel_change < 1e-7);
}

TEST_CASE("configuration contract") {
    const PlantParams p{};
    SolverConfig cfg;
    cfg.horizon_T = 0;
    CHECK_THROWS_AS((void)solve_finite_extent(p, 1, cfg, Param::sl), ConfigError);
    cfg = SolverConfig{};
    cfg.theta_grid = 16;
    CHECK_THROWS_AS((void)solve_finite_extent(p, 1, cfg, Param::sl), ConfigError);
    cfg = SolverConfig{};
    CHECK_THROWS_AS((void)solve_finite_extent(p, -1, cfg, Param::sl), ConfigError);
    CHECK_THROWS_AS((void)solve_finite_extent(p, 1, cfg, Param::both), ConfigError);
    CHECK(param_from_string("sl") == Param::sl);
    CHECK(param_from_string("io") == Param::io);
    CHECK(param_from_string("both") == Param::both);
    CHECK_THROWS_AS((void)param_from_string("neither"), ConfigError);
}
