#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knodel/odd_steps.hpp"
#include "test_util.hpp"

using namespace knodel;
using knodel::test::random_alpha;
using knodel::test::rat;

TEST_CASE("last step from the origin") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 4; ++trial) {
        const WalkParams p(random_alpha(rng));
        const StateDist out = odd_from_even(StateDist::initial(), p);
        CHECK(out.prob(StateId::top(1)) == p.alpha);
        CHECK(out.prob(StateId::extra_p()) == p.beta);
        CHECK(out.total_mass() == rat(1));
        CHECK(out.step() == 1);
    }
}

TEST_CASE("worked two-step example") {
    const WalkParams p(rat(1, 2));
    const StateDist in = StateDist::from_support(2, {{StateId::top(0), rat(1, 2)},
                                                     {StateId::top(2), rat(1, 4)},
                                                     {StateId::bottom(1), rat(1, 4)}});
    const StateDist out = odd_from_even(in, p);
    CHECK(out.prob(StateId::top(1)) == rat(3, 8));
    CHECK(out.prob(StateId::top(3)) == rat(1, 8));
    CHECK(out.prob(StateId::bottom(0)) == rat(1, 8));
    CHECK(out.prob(StateId::bottom(2)) == rat(1, 8));
    CHECK(out.prob(StateId::extra_p()) == rat(1, 4));
    CHECK(out.total_mass() == rat(1));
    CHECK(same_distribution(out, single_step(in, p)));
}

TEST_CASE("equals one chain transition along the whole evolution") {
    std::mt19937 rng(67);
    for (const Rational& alpha : {rat(1, 2), random_alpha(rng), random_alpha(rng)}) {
        const WalkParams p(alpha);
        StateDist d = StateDist::initial();
        for (int step = 0; step < 64; ++step) {
            const StateDist next = single_step(d, p);
            if (step % 2 == 0) CHECK(same_distribution(odd_from_even(d, p), next));
            d = next;
        }
    }
}

TEST_CASE("parity violations are rejected") {
    const WalkParams p(rat(1, 3));
    const StateDist odd = single_step(StateDist::initial(), p);
    CHECK_THROWS_AS(odd_from_even(odd, p), ParityViolation);
    const StateDist bad =
        StateDist::from_support(2, {{StateId::top(1), rat(1)}});  // odd-class state, even step
    CHECK_THROWS_AS(odd_from_even(bad, p), ParityViolation);
}

TEST_CASE("single-step series assembled from double-step layers") {
    const WalkParams p(rat(1, 3));
    const int steps = 16;
    const DoubleLayerSeries src = double_layer_series(6, steps / 2, p);
    for (const StateId target :
         {StateId::top(0), StateId::top(1), StateId::top(2), StateId::top(3), StateId::top(4),
          StateId::top(5), StateId::bottom(0), StateId::bottom(1), StateId::bottom(2),
          StateId::bottom(3), StateId::bottom(4), StateId::bottom(5), StateId::extra_p(),
          StateId::extra_q()}) {
        CHECK(single_series_from_double(target, steps, src, p) == state_series(target, steps, p));
    }
}
