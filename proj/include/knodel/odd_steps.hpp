#pragma once

#include "knodel/walk_graph.hpp"

namespace knodel {

/// One last-step application on top of an even number of steps, written
/// with the last-step relations instead of the transition kernel:
///   top(2j+1)  <- a top(2j) + b top(2j+2)  (+ b extra_q when j = 0)
///   bottom(2j) <- a bottom(2j-1) + b bottom(2j+1)   (j >= 1)
///   bottom(0)  <- a extra_q + b bottom(1)
///   extra_p    <- b top(0)
/// The input must live in the even parity class (ParityViolation).
/// Agrees with single_step exactly; the boundary rows are the exceptional
/// cases read off the origin recursions.
StateDist odd_from_even(const StateDist& d, const WalkParams& p);

/// Single-step occupation series assembled from double-step layer series:
/// even steps are the double-step coefficients, odd steps come from the
/// last-step relations above. Needs src indices up to (target.index+3)/2.
PowerSeries single_series_from_double(const StateId& target, int max_steps,
                                      const DoubleLayerSeries& src, const WalkParams& p);

}  // namespace knodel
