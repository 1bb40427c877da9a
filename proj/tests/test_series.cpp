#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knodel/power_series.hpp"
#include "test_util.hpp"

using namespace knodel;
using knodel::test::ps;
using knodel::test::random_series;
using knodel::test::rat;

TEST_CASE("addition") {
    CHECK(ps({{1, 1}, {1, 1}}) + ps({{1, 1}, {-1, 1}}) == ps({{2, 1}, {0, 1}}));
    // identity, and min-order truncation
    const PowerSeries a = ps({{3, 7}, {1, 2}, {-4, 5}});
    CHECK(a + PowerSeries(1) == ps({{3, 7}, {1, 2}}));
    CHECK(ps({{1, 1}, {1, 2}}) + ps({{0, 1}, {1, 2}}) == ps({{1, 1}, {1, 1}}));
}

TEST_CASE("multiplication") {
    CHECK(ps({{1, 1}, {1, 1}, {0, 1}}) * ps({{1, 1}, {-1, 1}, {0, 1}}) ==
          ps({{1, 1}, {0, 1}, {-1, 1}}));
    const PowerSeries a = ps({{2, 3}, {-1, 4}, {5, 1}});
    CHECK(a * PowerSeries::constant(rat(1), 2) == a);
    // (1 + v + v^2)(1 - v) = 1 - v^3
    CHECK(ps({{1, 1}, {1, 1}, {1, 1}, {0, 1}}) * ps({{1, 1}, {-1, 1}, {0, 1}, {0, 1}}) ==
          ps({{1, 1}, {0, 1}, {0, 1}, {-1, 1}}));
}

TEST_CASE("division") {
    const PowerSeries geom = PowerSeries::constant(rat(1), 6) / ps({{1, 1}, {-1, 1}, {0, 1},
                                                                    {0, 1}, {0, 1}, {0, 1}, {0, 1}});
    for (int k = 0; k <= 6; ++k) CHECK(geom[k] == rat(1));

    const PowerSeries a = ps({{5, 2}, {1, 3}, {-2, 7}, {1, 1}});
    CHECK(a / a == PowerSeries::constant(rat(1), 3));

    // (1 - v^2)/(1 - v^3): the quotient re-multiplied by the divisor is an
    // independent check of the division routine
    PowerSeries num(8), den(8);
    num[0] = rat(1);
    num[2] = rat(-1);
    den[0] = rat(1);
    den[3] = rat(-1);
    const PowerSeries q = num / den;
    CHECK(q * den == num);
    const long expected[6] = {1, 0, -1, 1, 0, -1};
    for (int k = 0; k < 6; ++k) CHECK(q[k] == rat(expected[k]));

    CHECK_THROWS_AS(num / PowerSeries::monomial(rat(1), 1, 8), ZeroConstantTerm);
}

TEST_CASE("square root") {
    PowerSeries one_minus_z(6);
    one_minus_z[0] = rat(1);
    one_minus_z[1] = rat(-1);
    const PowerSeries s = sqrt(one_minus_z);
    CHECK(s * s == one_minus_z);  // squaring oracle
    CHECK(s[0] == rat(1));
    CHECK(s[1] == rat(-1, 2));
    CHECK(s[2] == rat(-1, 8));
    CHECK(s[3] == rat(-1, 16));

    CHECK(sqrt(PowerSeries::constant(rat(1), 4)) == PowerSeries::constant(rat(1), 4));

    // (1 - z^2)(1 - z^2 (1-2a)^2) at a = 1/3: even root with z^2
    // coefficient -(a^2 + b^2) = -5/9
    PowerSeries f1(8), f2(8);
    f1[0] = rat(1);
    f1[2] = rat(-1);
    f2[0] = rat(1);
    f2[2] = rat(-1, 9);  // (1 - 2/3)^2
    const PowerSeries w = sqrt(f1 * f2);
    CHECK(w * w == f1 * f2);
    CHECK(w[0] == rat(1));
    CHECK(w[2] == rat(-5, 9));
    for (int k = 1; k <= 7; k += 2) CHECK(w[k] == rat(0));

    CHECK_THROWS_AS(sqrt(PowerSeries::constant(rat(2), 4)), NonSquareConstant);
    CHECK_THROWS_AS(sqrt(PowerSeries::monomial(rat(1), 1, 4)), NonSquareConstant);
}

TEST_CASE("shift_div") {
    PowerSeries a(4);
    a[2] = rat(1);
    a[3] = rat(1);
    CHECK(shift_div(a, 2) == ps({{1, 1}, {1, 1}, {0, 1}}));
    CHECK(shift_div(PowerSeries(3), 1) == PowerSeries(2));
    CHECK_THROWS_AS(shift_div(ps({{1, 1}, {1, 1}}), 1), InexactCancellation);
    CHECK_THROWS_AS(shift_div(PowerSeries(3), 4), std::invalid_argument);

    // (1 - (a^2+b^2) z^2 - sqrt((1-z^2)(1-z^2(1-2a)^2))) / z^2 at a = 1/2:
    // both low coefficients cancel exactly and the z^2 term is 2 a^2 b^2 = 1/8
    PowerSeries quartic(8);
    quartic[0] = rat(1);
    quartic[2] = rat(-1);  // (1-2a)^2 = 0 collapses one factor
    PowerSeries numer = PowerSeries::constant(rat(1), 8) -
                        PowerSeries::monomial(rat(1, 2), 2, 8) - sqrt(quartic);
    const PowerSeries shifted = shift_div(numer, 2);
    CHECK(shifted[0] == rat(0));
    CHECK(shifted[2] == rat(1, 8));
}

TEST_CASE("composition") {
    PowerSeries geom(5);
    for (int k = 0; k <= 5; ++k) geom[k] = rat(1);  // 1/(1-t)
    CHECK(compose(geom, PowerSeries::variable(5)) == geom);
    const PowerSeries a = ps({{4, 3}, {1, 5}, {2, 1}});
    CHECK(compose(a, PowerSeries(2)) == PowerSeries::constant(rat(4, 3), 2));
    CHECK_THROWS_AS(compose(a, PowerSeries::constant(rat(1), 2)), NonzeroInnerConstant);
}

TEST_CASE("reversion") {
    CHECK(revert(PowerSeries::variable(5)) == PowerSeries::variable(5));

    // z(v) = 4v/(1+v)^2 reverts to z/4 + z^2/8 + ...
    PowerSeries den(8);
    den[0] = rat(1);
    den[1] = rat(2);
    den[2] = rat(1);
    const PowerSeries zv = PowerSeries::monomial(rat(4), 1, 8) / den;
    const PowerSeries v = revert(zv);
    CHECK(v[1] == rat(1, 4));
    CHECK(v[2] == rat(1, 8));
    CHECK(compose(zv, v) == PowerSeries::variable(8));
    CHECK(compose(v, zv) == PowerSeries::variable(8));

    CHECK_THROWS_AS(revert(PowerSeries::constant(rat(1), 4)), NotRevertible);
    CHECK_THROWS_AS(revert(PowerSeries::monomial(rat(1), 2, 4)), NotRevertible);
}

TEST_CASE("algebra laws on random series") {
    std::mt19937 rng(20240811);
    const int order = 32;
    for (int trial = 0; trial < 20; ++trial) {
        PowerSeries a = random_series(rng, order);
        PowerSeries b = random_series(rng, order);
        PowerSeries c = random_series(rng, order);
        CHECK((a + b) - b == a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));

        if (b[0].is_zero()) b[0] = rat(1, 3);
        CHECK((a * b) / b == a);

        a[0] = rat(1);
        const PowerSeries s = sqrt(a);
        CHECK(s * s == a);
        CHECK(s[0] == rat(1));

        // shift round-trip
        CHECK(shift_div(shift_up(a, 5), 5) == a);

        if (trial % 4 == 0) {
            c[0] = rat(0);
            if (c[1].is_zero()) c[1] = rat(2, 5);
            const PowerSeries inv = revert(c);
            CHECK(compose(c, inv) == PowerSeries::variable(order));
            CHECK(compose(inv, c) == PowerSeries::variable(order));
        }
    }
}

TEST_CASE("linear solver") {
    std::mt19937 rng(7);
    const int order = 16;
    for (int trial = 0; trial < 10; ++trial) {
        const PowerSeries x = random_series(rng, order);
        const PowerSeries y = random_series(rng, order);
        PowerSeries b1 = random_series(rng, order), c1 = random_series(rng, order);
        PowerSeries b2 = random_series(rng, order), c2 = random_series(rng, order);
        b1[0] = rat(1);
        c2[0] = rat(1);
        c1[0] = rat(0);
        b2[0] = rat(0);  // determinant constant term 1
        const auto [xs, ys] = solve_linear_2x2(b1, c1, b1 * x + c1 * y, b2, c2, b2 * x + c2 * y);
        CHECK(xs == x);
        CHECK(ys == y);
    }
    const PowerSeries z = PowerSeries::variable(4);
    CHECK_THROWS_AS(solve_linear_2x2(z, z, z, z, z, z), SingularSystem);
}

TEST_CASE("rational basics") {
    CHECK(Rational::parse("5/16").str() == "5/16");
    CHECK(Rational::parse("-3/9").str() == "-1/3");
    CHECK(Rational::parse("7").str() == "7");
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK_THROWS_AS(Rational::parse("x"), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK(pow_int(rat(-2, 3), 3) == rat(-8, 27));
    CHECK(*exact_sqrt(rat(9, 4)) == rat(3, 2));
    CHECK(!exact_sqrt(rat(2)).has_value());
    CHECK(!exact_sqrt(rat(-1)).has_value());
}
