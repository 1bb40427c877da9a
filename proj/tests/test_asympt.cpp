#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "knodel/asympt.hpp"
#include "knodel/walk_graph.hpp"
#include "test_util.hpp"

using namespace knodel;
using knodel::test::rat;

TEST_CASE("exact expected end") {
    const WalkParams half(rat(1, 2));
    const PowerSeries e = expected_end_exact(8, half);
    CHECK(e[0] == rat(0));
    CHECK(e[1] == rat(3, 4));
    CHECK(e[2] == rat(19, 16));

    // one double-step reaches index 1 and index 2 with probability a*b each
    const WalkParams third(rat(1, 3));
    const PowerSeries e3 = expected_end_exact(4, third);
    CHECK(e3[0] == rat(0));
    CHECK(e3[1] == rat(3) * third.alpha * third.beta);
    CHECK(e3[1] == rat(2, 3));
}

TEST_CASE("half closed form") {
    const PowerSeries closed = expected_end_half_closed(64);
    CHECK(closed[0] == rat(0));
    CHECK(closed[1] == rat(3, 4));
    CHECK(closed[2] == rat(19, 16));
    CHECK(closed == expected_end_exact(64, WalkParams(rat(1, 2))));
}

TEST_CASE("reference coefficient of (1-z)^(-3/2)") {
    CHECK(reference_coefficient(0) == rat(1));
    CHECK(reference_coefficient(1) == rat(3, 2));
    CHECK(reference_coefficient(2) == rat(15, 8));
    // ratio to 2 sqrt(n/pi) approaches 1
    const int n = 10000;
    const double ref = reference_coefficient(n).to_double();
    const double target = 2.0 * std::sqrt(n / M_PI);
    CHECK(std::abs(ref / target - 1.0) < 1e-3);
}

TEST_CASE("asymptotic estimate") {
    const WalkParams half(rat(1, 2));
    const AsymptoticEstimate e = asymptotic_estimate(1000, half);
    CHECK(e.estimate == doctest::Approx(2.0 * std::sqrt(1000.0 / M_PI)));
    const AsymptoticEstimate e4 = asymptotic_estimate(4000, half);
    CHECK(e4.estimate == doctest::Approx(2.0 * e.estimate));

    const AsymptoticEstimate small = asymptotic_estimate(16, half, true);
    REQUIRE(small.exact.has_value());
    CHECK(*small.exact == expected_end_exact(16, half)[16]);
}

TEST_CASE("float sweep tracks the exact series") {
    const WalkParams p(rat(2, 5));
    const PowerSeries exact = expected_end_exact(32, p);
    const std::vector<double> swept = expected_end_float(32, p);
    for (int m = 0; m <= 32; ++m)
        CHECK(std::abs(swept[static_cast<size_t>(m)] - exact[m].to_double()) < 1e-9);
}

TEST_CASE("ratio to the estimate tightens with n") {
    for (const Rational& alpha : {rat(1, 2), rat(1, 3)}) {
        const WalkParams p(alpha);
        const std::vector<double> swept = expected_end_float(4096, p);
        double previous = 1.0;
        for (const int n : {256, 1024, 4096}) {
            const double deviation =
                std::abs(swept[static_cast<size_t>(n)] / asymptotic_estimate(n, p).estimate - 1.0);
            if (n > 256) CHECK(deviation < previous);
            previous = deviation;
        }
        CHECK(previous < 0.05);  // at n = 4096
    }
}
