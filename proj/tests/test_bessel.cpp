#include <catch2/catch_amalgamated.hpp>

#include "dotcav/bessel.hpp"
#include "support/bessel_oracle.hpp"

using dotcav::bessel_zero;

TEST_CASE("first zeros against the series-bisection oracle") {
    // Frozen from the independent oracle (long-double series + bisection).
    CHECK(bessel_zero(0, 1) == Catch::Approx(2.404825557695773).margin(1e-12));
    CHECK(bessel_zero(1, 1) == Catch::Approx(3.831705970207512).margin(1e-12));

    for (int n = 0; n <= 4; ++n)
        for (int nu = 1; nu <= 4; ++nu) {
            const double ref = oracle::bessel_zero_bisect(n, nu);
            INFO("n=" << n << " nu=" << nu);
            CHECK(bessel_zero(n, nu) == Catch::Approx(ref).margin(1e-11));
        }
}

TEST_CASE("zeros interlace") {
    for (int n = 0; n <= 5; ++n)
        for (int nu = 1; nu <= 5; ++nu) {
            CHECK(bessel_zero(n, nu) < bessel_zero(n + 1, nu));
            CHECK(bessel_zero(n + 1, nu) < bessel_zero(n, nu + 1));
        }
}

TEST_CASE("zero really is a root of J_n") {
    for (int n = 0; n <= 6; ++n)
        for (int nu = 1; nu <= 6; ++nu)
            CHECK(std::abs(dotcav::bessel_j(n, bessel_zero(n, nu))) < 1e-12);
}
