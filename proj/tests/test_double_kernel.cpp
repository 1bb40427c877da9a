#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knodel/double_kernel.hpp"
#include "knodel/walk_graph.hpp"
#include "test_util.hpp"

using namespace knodel;
using knodel::test::random_alpha;
using knodel::test::rat;

TEST_CASE("kernel root") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        const Rational a = random_alpha(rng);
        const WalkParams p(a);
        const PowerSeries r2 = double_kernel_root(p, 32);
        CHECK(r2[0] == rat(0));
        CHECK(r2[1] == a * (rat(1) - a));
        // the denominator vanishes at its small root
        const UPoly den = double_kernel_denominator(p, 32);
        CHECK(den.eval_at(r2).is_zero());
    }
    const WalkParams half(rat(1, 2));
    CHECK(double_kernel_denominator(half, 32).eval_at(double_kernel_root(half, 32)).is_zero());
}

TEST_CASE("denominator factorisation") {
    // den = z a b (-1 + z a^2)(u - 1/r2)(u - r2); multiplied through by r2:
    // r2 * den = z a b (-1 + z a^2) (r2 u^2 - (1 + r2^2) u + r2)
    std::mt19937 rng(13);
    for (int trial = 0; trial < 4; ++trial) {
        const Rational a = random_alpha(rng);
        const WalkParams p(a);
        const int n = 24;
        const PowerSeries r2 = double_kernel_root(p, n);
        const UPoly den = double_kernel_denominator(p, n);

        PowerSeries front = PowerSeries::monomial(a * (rat(1) - a), 1, n);  // z a b
        PowerSeries neg = PowerSeries::constant(rat(-1), n);
        neg[1] = a * a;  // -1 + z a^2
        front = front * neg;

        UPoly quad(2, n);
        quad.set_coeff(0, r2);
        quad.set_coeff(1, -(PowerSeries::constant(rat(1), n) + r2 * r2));
        quad.set_coeff(2, r2);

        CHECK(upoly_agree(den.scaled(r2), quad.scaled(front), 2, n - 1));
    }
}

TEST_CASE("boundary solve vs chain evolution") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 4; ++trial) {
        const Rational a = random_alpha(rng);
        const WalkParams p(a);
        const DoubleBoundary b = solve_boundary_double(p, 12);
        CHECK(b.f0[0] == rat(1));
        CHECK(b.f0[1] == rat(2) * a * a - rat(2) * a + rat(1));
        CHECK(b.f0[2] == rat(5) * pow_int(a, 4) - rat(10) * pow_int(a, 3) + rat(9) * a * a -
                             rat(4) * a + rat(1));
        CHECK(b.g0[1] == a * (rat(1) - a));
    }
    const WalkParams p(rat(1, 3));
    const DoubleBoundary b = solve_boundary_double(p, 64);
    CHECK(b.f0 == double_state_series(DoubleStateId::upper(0), 64, p));
    CHECK(b.g0 == double_state_series(DoubleStateId::lower(0), 64, p));
    CHECK(b.fq == double_state_series(DoubleStateId::extra(), 64, p));
}

TEST_CASE("u = 0 relations hold for chain-derived boundary series") {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 4; ++trial) {
        const Rational a = random_alpha(rng);
        const Rational be = rat(1) - a;
        const WalkParams p(a);
        const int n = 24;
        const PowerSeries f0 = double_state_series(DoubleStateId::upper(0), n + 2, p);
        const PowerSeries g0 = double_state_series(DoubleStateId::lower(0), n + 2, p);
        const PowerSeries r2 = double_kernel_root(p, n + 2);
        PowerSeries stable = PowerSeries::constant(rat(1), n + 2);
        stable[1] = -(a * a);  // 1 - z a^2

        // z a b (1 - z a^2) f0 = r2 (r2 z^2 b^3 a g0 - z a^2 + z^2 a^2 b^2 g0 + 1)
        const PowerSeries lhs = shift_up(a * be * (stable * f0), 1);
        const PowerSeries rhs =
            r2 * (shift_up(a * be * be * be * (r2 * g0), 2) + shift_up(a * a * be * be * g0, 2) -
                  PowerSeries::monomial(a * a, 1, n + 2) + PowerSeries::constant(rat(1), n + 2));
        CHECK(agree_through(lhs, rhs, n));

        // (1 - z a^2) g0 - z a b r2 g0 = r2 (1 - z a^2) f0
        const PowerSeries lhs2 = stable * g0 - shift_up(a * be * (r2 * g0), 1);
        const PowerSeries rhs2 = r2 * (stable * f0);
        CHECK(agree_through(lhs2, rhs2, n));
    }
}

TEST_CASE("state series from kernel root powers") {
    const WalkParams half(rat(1, 2));
    {
        const int n = 16;
        const DoubleBoundary b = solve_boundary_double(half, n);
        const PowerSeries r2 = double_kernel_root(half, n + 1);
        CHECK(double_upper_series(0, b, r2, half, n) == b.f0);
        CHECK(double_lower_series(0, b, r2, half, n) == b.g0);
        const PowerSeries f1 = double_upper_series(1, b, r2, half, n);
        CHECK(f1[1] == rat(1, 4));
        CHECK(f1 == double_state_series(DoubleStateId::upper(1), n, half));
    }
    const WalkParams third(rat(1, 3));
    {
        const int n = 32;
        const DoubleBoundary b = solve_boundary_double(third, n);
        const PowerSeries r2 = double_kernel_root(third, n + 1);
        const DoubleLayerSeries dp = double_layer_series(4, n, third);
        for (int j = 0; j <= 4; ++j) {
            CHECK(double_upper_series(j, b, r2, third, n) == dp.upper[static_cast<size_t>(j)]);
            CHECK(double_lower_series(j, b, r2, third, n) == dp.lower[static_cast<size_t>(j)]);
        }
        // two-step path to upper state 2 has probability (a b)^2
        const Rational ab = third.alpha * third.beta;
        const PowerSeries f2 = double_upper_series(2, b, r2, third, n);
        CHECK(f2[0] == rat(0));
        CHECK(f2[1] == rat(0));
        CHECK(f2[2] == ab * ab);
    }
}

TEST_CASE("parity cross-check between the two kernel pipelines") {
    const WalkParams p(rat(2, 5));
    for (int j = 0; j <= 2; ++j) {
        const ParityCrosscheck c = parity_crosscheck(j, p, 12);
        CHECK(c.ok);
    }
    // failure injection flips the comparison
    const PowerSeries dbl = double_state_series(DoubleStateId::upper(1), 8, p);
    PowerSeries single = state_series(StateId::top(2), 16, p);
    CHECK(parity_match(single, dbl, 8));
    single[4] += rat(1, 9);
    CHECK(!parity_match(single, dbl, 8));
}
