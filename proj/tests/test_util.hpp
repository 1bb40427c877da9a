#pragma once

#include <random>
#include <utility>
#include <vector>

#include "knodel/power_series.hpp"

namespace knodel::test {

inline Rational rat(long n, long d = 1) { return Rational(n, d); }

/// Series from explicit (numerator, denominator) pairs.
inline PowerSeries ps(const std::vector<std::pair<long, long>>& coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (const auto& [n, d] : coeffs) c.emplace_back(n, d);
    return PowerSeries(std::move(c));
}

inline Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    return Rational(num(rng), den(rng));
}

inline PowerSeries random_series(std::mt19937& rng, int order) {
    PowerSeries s(order);
    for (int k = 0; k <= order; ++k) s[k] = random_rational(rng);
    return s;
}

/// Random alpha strictly inside (0, 1).
inline Rational random_alpha(std::mt19937& rng) {
    std::uniform_int_distribution<long> den(2, 19);
    const long d = den(rng);
    std::uniform_int_distribution<long> num(1, d - 1);
    return Rational(num(rng), d);
}

}  // namespace knodel::test
