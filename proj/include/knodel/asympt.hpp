#pragma once

#include <optional>
#include <vector>

#include "knodel/power_series.hpp"
#include "knodel/walk_params.hpp"

namespace knodel {

/// Exact expected end-index series (coefficient m = expected state index
/// after m double-steps), computed by transferring the closed form in v
/// and cross-checked against the chain evolution.
PowerSeries expected_end_exact(int order, const WalkParams& p);

/// The alpha = 1/2 closed form (z - 1 + (1+z) sqrt(1-z)) / (2 (1-z)^2)
/// expanded directly in z.
PowerSeries expected_end_half_closed(int order);

/// [z^n] (1-z)^(-3/2), the reference coefficient the expected end
/// approaches at alpha = 1/2.
Rational reference_coefficient(int n);

/// 4 sqrt(alpha beta) sqrt(n / pi), with n counted in double-steps.
struct AsymptoticEstimate {
    long n = 0;
    double estimate = 0.0;
    std::optional<Rational> exact;  // exact coefficient, when affordable
};
AsymptoticEstimate asymptotic_estimate(long n, const WalkParams& p, bool with_exact = false);

/// Double-precision sweep of the double-step chain; entry m is the
/// expected end index after m double-steps. Used for large n where exact
/// rationals are too expensive.
std::vector<double> expected_end_float(int max_double_steps, const WalkParams& p);

}  // namespace knodel
