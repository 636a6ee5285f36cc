#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "dotcav/constants.hpp"
#include "dotcav/single_band.hpp"
#include "support/shooting_oracle.hpp"

using namespace dotcav;

TEST_CASE("paper electron well against the shooting oracle") {
    const auto states = solve_single_band(300.0, 4.0, 0.067, 0.094);
    const auto ref = oracle::shoot_bound_states({0.3, 4.0, 0.067, 0.094});
    REQUIRE(states.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i)
        CHECK(states[i].energy == Catch::Approx(ref[i]).margin(1e-4));
}

TEST_CASE("randomized wells against the shooting oracle") {
    std::mt19937_64 rng(7321u);
    std::uniform_real_distribution<double> width(2.0, 10.0), depth(80.0, 600.0),
        mass(0.05, 0.5);
    for (int trial = 0; trial < 8; ++trial) {
        const double L = width(rng), V = depth(rng);
        const double mw = mass(rng), mb = mass(rng);
        INFO("L=" << L << " V=" << V << " mw=" << mw << " mb=" << mb);
        const auto states = solve_single_band(V, L, mw, mb);
        const auto ref = oracle::shoot_bound_states({V * 1e-3, L, mw, mb});
        REQUIRE(states.size() == ref.size());
        for (std::size_t i = 0; i < ref.size(); ++i)
            CHECK(states[i].energy == Catch::Approx(ref[i]).margin(1e-4));
    }
}

TEST_CASE("infinite-well limit") {
    // Deep wide well: E_d -> hbar^2 pi^2 d^2 / (2 m L^2).
    const double L = 100.0, m = 1.0;
    const auto states = solve_single_band(3000.0, L, m, m);
    REQUIRE(states.size() >= 3);
    for (int d = 1; d <= 3; ++d) {
        const double Einf =
            units::hbar2_over_2m0_eVnm2 * M_PI * M_PI * d * d / (m * L * L);
        CHECK(states[d - 1].energy == Catch::Approx(Einf).epsilon(0.01));
    }
}

TEST_CASE("ground state envelope parity and normalization") {
    ZGrid grid{-20, 20, 2048};
    const auto states = solve_single_band(300.0, 4.0, 0.067, 0.094, grid);
    REQUIRE(!states.empty());
    const auto& g = states.front();
    CHECK(g.even);
    double norm = 0;
    for (int i = 0; i < grid.n; ++i) {
        norm += g.envelope[i] * g.envelope[i] * trapezoid_weight(grid, i);
        CHECK(std::abs(g.envelope[i] - g.envelope[grid.n - 1 - i]) < 1e-8);
    }
    CHECK(norm == Catch::Approx(1.0).margin(1e-6));
}

TEST_CASE("state count grows with width, zero states is valid") {
    // A vanishing well in a fixed sweep window holds nothing.
    CHECK(solve_single_band(300.0, 0.02, 0.067, 0.094).size() <= 1);
    std::size_t prev = 0;
    for (double L : {1.0, 2.0, 4.0, 8.0, 16.0}) {
        const auto n = solve_single_band(300.0, L, 0.067, 0.094).size();
        CHECK(n >= prev);
        prev = n;
    }
}
