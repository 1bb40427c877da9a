#pragma once

#include <string>
#include <vector>

#include "knodel/upoly.hpp"
#include "knodel/walk_params.hpp"

namespace knodel {

/// sqrt((1-z)(1+z)(1-z+2az)(1+z-2az)), the square root of the kernel
/// discriminant. Constant term 1; even series.
PowerSeries discriminant_sqrt(const WalkParams& p, int order);

/// Square of the small kernel root:
/// S = (1 - (a^2+b^2) z^2 - W) / (2 a b z^2), an even series a*b*z^2 + ...
/// The two lowest coefficients of the numerator must cancel exactly
/// (InexactCancellation flags a transcription error in W).
PowerSeries small_root_square(const WalkParams& p, int order);

/// Kernel denominator D(u, z) shared by the four quadrant functions.
/// Even in u, D(u, 0) = u^2, and D vanishes identically under u^2 := S.
UPoly kernel_denominator(const WalkParams& p, int zorder);

/// One printed numerator in the shape D * X = known + f0_coef*f0 + g0_coef*g0.
struct KernelNumerator {
    UPoly known;
    UPoly f0_coef;
    UPoly g0_coef;
};

/// The four numerators: even/odd u-part of the top/bottom layer functions.
struct QuadrantNumerators {
    KernelNumerator even_top, odd_top, even_bottom, odd_bottom;
};
QuadrantNumerators quadrant_numerators(const WalkParams& p, int zorder);

struct BruteBoundary {
    PowerSeries f0, g0;
};

/// Substitutes u^2 := S into the two even numerators and solves the
/// resulting 2x2 series system for the boundary series (f0, g0).
BruteBoundary solve_boundary_brute(const WalkParams& p, int order);

/// All layer series recovered from the boundary values by the forward
/// recursions. Each division by z costs one order of truncation, so the
/// returned series share order f0.order() - max_index.
struct BruteStateTable {
    std::vector<PowerSeries> top, bottom;  // indices 0..max_index
    int common_order = 0;
};
BruteStateTable states_from_boundary(const PowerSeries& f0, const PowerSeries& g0,
                                     const WalkParams& p, int max_index);

/// Result of one coefficientwise identity check.
struct EquationCheck {
    std::string name;
    bool ok = false;
    int bad_udeg = -1;  // first failing u-degree / z-order, -1 when ok
    int bad_zorder = -1;
};

/// Checks the four bivariate functional equations (cleared of 1/u) on the
/// assembled layer series, plus the printed numerator identities
/// D*X = known + f0_coef*f0 + g0_coef*g0 for all four quadrants.
/// Compares u-degrees 0..udeg and z-orders 0..zorder; the state table
/// must carry indices up to udeg and orders at least zorder + 2.
std::vector<EquationCheck> check_functional_equations(const BruteStateTable& table,
                                                      const PowerSeries& f0,
                                                      const PowerSeries& g0, const WalkParams& p,
                                                      int udeg, int zorder);

/// Comparison of the printed closed-form boundary expressions (with the
/// stray token "aW" read as alpha*W) against the kernel solve. Purely a
/// diagnostic: the solve is authoritative, the printed forms are suspect.
struct PrintedBoundaryReport {
    int order = 0;
    PowerSeries f0_printed, f0_solved, g0_printed, g0_solved;
    bool f0_match = false, g0_match = false;
    int f0_first_mismatch = -1, g0_first_mismatch = -1;

    std::string text() const;
};
PrintedBoundaryReport printed_boundary_report(const WalkParams& p, int order);

}  // namespace knodel
