#pragma once

#include <vector>

#include "knodel/power_series.hpp"
#include "knodel/walk_params.hpp"

namespace knodel {

/// Ratio of two polynomials in the substitution variable v, with
/// den(0) != 0 so that it expands as a power series in v.
struct RationalFunction {
    std::vector<Rational> num;
    std::vector<Rational> den;

    /// v-series expansion to the given order.
    PowerSeries series(int order) const;
};

/// The substitution z(v) = v / ((alpha + v beta)(beta + v alpha)).
RationalFunction substitution_map(const WalkParams& p);

/// Closed forms in v for the double-step system: boundary series, the
/// per-state coefficient extractions and the expected end index. The
/// upper-state forms follow from expanding the bivariate function in u;
/// the printed one-line extraction display drops a factor in its second
/// term and is reproduced only by the regression tests.
struct ClosedForms {
    WalkParams params;
    RationalFunction f0;
    RationalFunction g0;
    RationalFunction expected_end;

    RationalFunction upper_state(int j) const;
    RationalFunction lower_state(int j) const;
};
ClosedForms closed_forms(const WalkParams& p);

/// [z^N] H(z(v)) = [v^N] a b (1 - v^2) ((a+bv)(b+av))^(N-1) H(v).
Rational transfer_coeff(const RationalFunction& h, int n, const WalkParams& p);

/// Transfer with an explicit exponent on (a+bv)(b+av); the correct
/// exponent is n-1 (kept separate so the off-by-one in the printed
/// formula stays pinned by a regression test).
Rational transfer_coeff_dpow(const RationalFunction& h, int n, const WalkParams& p, int dpow);

/// z-series of H(z(v)) to the given order, by batched transfer.
PowerSeries transfer_series(const RationalFunction& h, int order, const WalkParams& p);

/// v(z): compositional inverse of the v-series of z(v). Coincides with
/// the double-step kernel root.
PowerSeries v_of_z(const WalkParams& p, int order);

}  // namespace knodel
