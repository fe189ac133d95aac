#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "localsyn/affine.hpp"
#include "localsyn/errors.hpp"
#include "localsyn/sl_maps.hpp"
#include "localsyn/spatial.hpp"

#include "helpers.hpp"

using namespace localsyn;

namespace {

void check_series_equal(const LaurentSeries& a, const LaurentSeries& b, double tol = 1e-12) {
    const int lo = std::min(a.lowest_power(), b.lowest_power());
    const int hi = std::max(a.highest_power(), b.highest_power());
    for (int t = lo; t <= hi; ++t) CHECK(std::abs(a.coeff(t) - b.coeff(t)) <= tol);
}

} // namespace

TEST_CASE("closed-loop maps satisfy the defining algebra") {
    const PlantParams p{};
    auto g = test_helpers::rng(31);
    const LaurentSeries r12 = series_add(make_series(2, std::vector<double>{1.0}),
                                         test_helpers::random_series(g, 3, 4));
    // force the structure constants rho^3 = sigma + beta
    const double theta = 0.8;
    const double sg = sigma_at(p, theta);
    const LaurentSeries r12ok =
        series_add(make_series(2, std::vector<double>{1.0, sg + p.beta}),
                   series_shift(test_helpers::random_series(g, 0, 4), 4));
    const SlFreqMaps m = sl_freq_maps(p, theta, r12ok);

    const LaurentSeries zs = make_series(-1, std::vector<double>{1.0, -sg});
    const LaurentSeries zb = make_series(-1, std::vector<double>{1.0, -p.beta});
    const LaurentSeries one = make_series(0, std::vector<double>{1.0});

    check_series_equal(m.r11, series_mul(zs, m.r12));
    check_series_equal(m.r22, series_mul(zb, m.r12));
    check_series_equal(m.n1, series_sub(series_mul(series_mul(zs, zb), m.r12), one));
    check_series_equal(m.r21, m.n1);
    check_series_equal(m.m2, m.n1);
    check_series_equal(m.m1, series_mul(zs, m.n1));
    check_series_equal(m.n2, series_mul(zb, m.n1));
    check_series_equal(m.l, series_mul(series_mul(zs, zb), m.n1));
    (void)r12;
}

TEST_CASE("admissible parameters give causal maps, broken structure does not") {
    const PlantParams p{};
    auto g = test_helpers::rng(32);
    const ExtentVector f = test_helpers::random_fir(g, 2, 4);
    const SlIndexMaps m = sl_index_maps(p, build_r12(p, f));
    for (const ExtentVector* v : {&m.r11, &m.r12, &m.r21, &m.r22, &m.m1, &m.m2, &m.n1, &m.n2})
        CHECK(causal_check(*v, 1e-12, true).ok);
    CHECK(causal_check(m.l, 1e-12).ok);

    // leading delay too shallow
    const SlFreqMaps bad1 = sl_freq_maps(p, 0.0, make_series(1, std::vector<double>{1.0}));
    CHECK_FALSE(causal_check(bad1.l, 1e-12).ok);
    // missing the mandated z^-3 coefficient sigma + beta
    const SlFreqMaps bad2 = sl_freq_maps(p, 0.0, make_series(2, std::vector<double>{1.0}));
    CHECK_FALSE(causal_check(bad2.l, 1e-12).ok);
    // wrong leading weight
    const SlFreqMaps bad3 = sl_freq_maps(
        p, 0.0, make_series(2, std::vector<double>{2.0, sigma_at(p, 0.0) + p.beta}));
    CHECK_FALSE(causal_check(bad3.l, 1e-12).ok);
}

TEST_CASE("assembled stack shape and golden entries") {
    const PlantParams p{};
    const AffineMapPair raw = build_sl_blocks(p, 0);
    REQUIRE(raw.blocks.size() == 6);
    CHECK(raw.blocks[0].name == "n1");
    CHECK(raw.blocks[4].name == "l");
    CHECK(stack_rows(raw) == 28);

    // n1 band center is (z - sigma-stencil) pinched with (z - beta): at the
    // center offset this is (z - alpha)(z - beta)
    const MapBlock& n1 = raw.blocks[0];
    check_series_equal(n1.band_at(0), make_series(-2, std::vector<double>{1.0, -2.5, 1.5}));
    check_series_equal(n1.band_at(1), make_series(-1, std::vector<double>{-1.2, 1.2}));
    check_series_equal(n1.h.at(0), make_series(0, std::vector<double>{-1.0}));

    // l offset rows carry alpha kappa (z - beta)
    const MapBlock& l = raw.blocks[4];
    check_series_equal(l.h.at(1), make_series(-1, std::vector<double>{1.2, -1.2}));
    check_series_equal(l.h.at(-1), make_series(-1, std::vector<double>{1.2, -1.2}));
    check_series_equal(l.h.at(0), make_series(-2, std::vector<double>{-1.0, 2.5, -1.5}));

    // assembly shifts the band four steps and leaves a causal offset
    const AffineMapPair asm0 = assemble_sl(p, 0);
    check_series_equal(asm0.blocks[0].band_at(0),
                       make_series(2, std::vector<double>{1.0, -2.5, 1.5}));
    CHECK(causal_check(asm0, 1e-12).ok);
}

TEST_CASE("declared extents match the bound table") {
    for (int E = 0; E <= 5; ++E) {
        const SlExtents b = sl_extents(E);
        CHECK(b.R == std::max(E + 1, 2));
        CHECK(b.N == std::max(E + 1, 2));
        CHECK(b.M == std::max(E + 2, 3));
        CHECK(b.L == std::max(E + 2, 3));
    }
}

TEST_CASE("measured extents attain the bounds for generic f and floor at f = 0") {
    const PlantParams p{};
    auto g = test_helpers::rng(33);
    for (int E = 0; E <= 4; ++E) {
        const ExtentVector f = test_helpers::random_fir(g, E, 3);
        const SlIndexMaps m = sl_index_maps(p, build_r12(p, f));
        const SlExtents b = sl_extents(E);
        CHECK(std::max({measured_extent(m.r11), measured_extent(m.r12), measured_extent(m.r21),
                        measured_extent(m.r22)}) == b.R);
        CHECK(std::max(measured_extent(m.m1), measured_extent(m.m2)) == b.M);
        CHECK(std::max(measured_extent(m.n1), measured_extent(m.n2)) == b.N);
        CHECK(measured_extent(m.l) == b.L);
    }
    const SlIndexMaps m0 = sl_index_maps(p, build_r12(p, ExtentVector(3)));
    CHECK(measured_extent(m0.r12) == 1);
    CHECK(measured_extent(m0.n1) == 2);
    CHECK(measured_extent(m0.l) == 3);
}

TEST_CASE("controller recovery matches the closed form and guards the pole") {
    const PlantParams p{};
    const double theta = 2.1;
    const std::complex<double> z(0.4, 1.3);
    const std::complex<double> f_eval(0.7, -0.2);
    const std::complex<double> a = recover_controller_sl(p, f_eval, theta, z);
    const std::complex<double> b = explicit_controller(p, f_eval, theta, z);
    CHECK(std::abs(a - b) / std::abs(b) < 1e-12);

    // f chosen so that z^2 + (sigma + beta) z + f = 0 at this sample
    const double sg = sigma_at(p, theta);
    const std::complex<double> f_pole = -(z * z + (sg + p.beta) * z);
    CHECK_THROWS_AS((void)recover_controller_sl(p, f_pole, theta, z), NumericalError);
    CHECK_THROWS_AS((void)explicit_controller(p, f_pole, theta, z), NumericalError);
}
