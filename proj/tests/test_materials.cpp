#include <catch2/catch_amalgamated.hpp>

#include "dotcav/materials.hpp"

using namespace dotcav;

TEST_CASE("tabulated endpoint parameters") {
    const auto g = materials::lookup("GaAs");
    CHECK(g.gamma1 == 6.98);
    CHECK(g.gamma2 == 2.06);
    CHECK(g.gamma3 == 2.93);
    CHECK(g.delta_so == Catch::Approx(0.341));
    CHECK(g.a_v == Catch::Approx(-1.116));
    CHECK(g.b_def == Catch::Approx(-2.0));
    CHECK(g.eps_r == Catch::Approx(13.2));

    const auto a = materials::lookup("AlAs");
    CHECK(a.gamma1 == 3.76);
    CHECK(a.gamma2 == 0.82);
    CHECK(a.gamma3 == 1.42);
    CHECK(a.delta_so == Catch::Approx(0.280));

    CHECK_THROWS_AS(materials::lookup("InAs"), std::invalid_argument);
}

TEST_CASE("lookup is referentially transparent") {
    const auto a = materials::lookup("GaAs");
    const auto b = materials::lookup("GaAs");
    CHECK(a.gamma1 == b.gamma1);
    CHECK(a.me_eff == b.me_eff);
    CHECK(a.eps_r == b.eps_r);
}

TEST_CASE("ternary interpolation") {
    SECTION("endpoints are exact") {
        const auto x0 = materials::interpolate_ternary(0.0);
        const auto x1 = materials::interpolate_ternary(1.0);
        CHECK(x0.gamma1 == materials::gaas().gamma1);
        CHECK(x0.delta_so == materials::gaas().delta_so);
        CHECK(x1.gamma1 == materials::alas().gamma1);
        CHECK(x1.me_eff == materials::alas().me_eff);
    }
    SECTION("barrier composition x = 0.36") {
        // (1 - 0.36)*6.98 + 0.36*3.76 evaluated independently.
        const auto m = materials::interpolate_ternary(0.36);
        CHECK(m.gamma1 == Catch::Approx(5.8208).epsilon(1e-12));
    }
    SECTION("affine in x: midpoint property") {
        const auto g = materials::gaas();
        const auto a = materials::alas();
        const auto mid = materials::interpolate_ternary(0.5);
        CHECK(mid.gamma2 == Catch::Approx(0.5 * (g.gamma2 + a.gamma2)));
        CHECK(mid.gamma3 == Catch::Approx(0.5 * (g.gamma3 + a.gamma3)));
        CHECK(mid.a_v == Catch::Approx(0.5 * (g.a_v + a.a_v)));
        CHECK(mid.eps_r == Catch::Approx(0.5 * (g.eps_r + a.eps_r)));
        CHECK(mid.me_eff == Catch::Approx(0.5 * (g.me_eff + a.me_eff)));
    }
    SECTION("out-of-range rejected") {
        CHECK_THROWS_AS(materials::interpolate_ternary(-0.1), std::invalid_argument);
        CHECK_THROWS_AS(materials::interpolate_ternary(1.1), std::invalid_argument);
    }
    SECTION("interpolated set keeps invariants") {
        for (double x : {0.1, 0.36, 0.7, 0.95})
            CHECK_NOTHROW(materials::interpolate_ternary(x).check());
    }
}
