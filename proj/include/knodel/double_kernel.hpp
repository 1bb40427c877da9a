#pragma once

#include "knodel/upoly.hpp"
#include "knodel/walk_params.hpp"

namespace knodel {

/// Small root r2 of the double-step kernel: the unique power-series root
/// of the denominator below. r2(0) = 0 with leading term a*b*z. The large
/// root 1/r2 is never materialised; formulas containing it are multiplied
/// through by r2 first.
PowerSeries double_kernel_root(const WalkParams& p, int order);

/// Denominator of the double-step system as a quadratic in u:
/// u - 2uza^2 - zabu^2 + z^2a^3bu^2 - zab + z^2a^3b + z^2ua^4 - zub^2 + z^2ub^2a^2.
UPoly double_kernel_denominator(const WalkParams& p, int zorder);

/// Boundary series of the double-step system. fq = z a b g0 / (1 - z a^2).
struct DoubleBoundary {
    PowerSeries f0, g0, fq;
};

/// The two u = 0 relations, cleared of the large root, solved for f0, g0.
DoubleBoundary solve_boundary_double(const WalkParams& p, int order);

/// [u^j] of the upper-layer bivariate function via powers of r2; the
/// series of occupying upper state j. r2 must carry order >= order + 1.
PowerSeries double_upper_series(int j, const DoubleBoundary& b, const PowerSeries& r2,
                                const WalkParams& p, int order);

/// Lower-layer companion.
PowerSeries double_lower_series(int j, const DoubleBoundary& b, const PowerSeries& r2,
                                const WalkParams& p, int order);

/// True when the double-step series equals the even part of the
/// single-step one: [z^m] dbl == [z^2m] single for all m <= max_m.
bool parity_match(const PowerSeries& single, const PowerSeries& dbl, int max_m);

/// Cross-check of the two kernel pipelines: upper state j against layer
/// series 2j, lower state j against layer series 2j+1, both to the given
/// double-step order.
struct ParityCrosscheck {
    bool ok = true;
    int bad_layer = -1;  // 0 = upper, 1 = lower
    int bad_m = -1;
};
ParityCrosscheck parity_crosscheck(int j, const WalkParams& p, int order);

}  // namespace knodel
