#include "knodel/double_kernel.hpp"

#include "knodel/kernel_brute.hpp"

namespace knodel {

namespace {

PowerSeries power(const PowerSeries& s, int e) {
    PowerSeries r = PowerSeries::constant(Rational(1), s.order());
    for (int i = 0; i < e; ++i) r = r * s;
    return r;
}

// 1 - z a^2 as a series.
PowerSeries one_minus_za2(const WalkParams& p, int order) {
    PowerSeries s = PowerSeries::constant(Rational(1), order);
    s[1] = -(p.alpha * p.alpha);
    return s;
}

}  // namespace

PowerSeries double_kernel_root(const WalkParams& p, int order) {
    if (order < 1) throw std::invalid_argument("double_kernel_root: order must be >= 1");
    const int n = order + 1;
    const Rational one(1);
    const Rational sigma = p.alpha * p.alpha + p.beta * p.beta;
    // discriminant (1-z)(1-z(1-2a)^2), algebraically equal to the printed
    // radicand
    PowerSeries f1 = PowerSeries::constant(one, n);
    f1[1] = -one;
    PowerSeries f2 = PowerSeries::constant(one, n);
    f2[1] = -pow_int(one - Rational(2) * p.alpha, 2);
    const PowerSeries root = sqrt(f1 * f2);

    PowerSeries numer = PowerSeries::constant(one, n) - PowerSeries::monomial(sigma, 1, n) - root;
    PowerSeries r2 = shift_div(numer, 1) / (Rational(2) * p.alpha * p.beta);
    if (!r2[0].is_zero())
        throw InexactCancellation("double_kernel_root: linear term of the numerator survives");
    return r2;
}

UPoly double_kernel_denominator(const WalkParams& p, int zorder) {
    const Rational a = p.alpha;
    const Rational b = p.beta;
    const Rational ab = a * b;
    const Rational a3b = a * a * a * b;
    UPoly d(2, zorder);
    d.add_term(1, 0, Rational(1));
    d.add_term(1, 1, Rational(-2) * a * a);
    d.add_term(2, 1, -ab);
    d.add_term(2, 2, a3b);
    d.add_term(0, 1, -ab);
    d.add_term(0, 2, a3b);
    d.add_term(1, 2, pow_int(a, 4));
    d.add_term(1, 1, -(b * b));
    d.add_term(1, 2, b * b * a * a);
    return d;
}

DoubleBoundary solve_boundary_double(const WalkParams& p, int order) {
    if (order < 2) throw std::invalid_argument("solve_boundary_double: order must be >= 2");
    const int n = order;
    const Rational a = p.alpha;
    const Rational b = p.beta;
    const Rational ab = a * b;
    const PowerSeries r2 = double_kernel_root(p, n + 1);
    const PowerSeries stable = one_minus_za2(p, n + 1);  // 1 - z a^2

    // f0 relation: r2 z^2 b^3 a g0 - z a^2 + z^2 a^2 b^2 g0 + 1
    //            = f0 * z a b (-1 + z a^2) (-1/r2);
    // multiplied by r2 and divided by the common factor z:
    //   a b (1 - z a^2) f0 - z (a b^3 r2^2 + a^2 b^2 r2) g0 = (r2/z)(1 - z a^2)
    const PowerSeries r2sq = r2 * r2;
    const PowerSeries b1 = ab * stable;
    const PowerSeries c1 = -shift_up(a * b * b * b * r2sq + a * a * b * b * r2, 1);
    const PowerSeries rhs1 = shift_div(r2, 1) * stable;

    // g0 relation: g0 (-1 + z a^2) / r2 = -z a b g0 + (z a^2 - 1) f0;
    // multiplied by r2:
    //   r2 (1 - z a^2) f0 + (z a^2 - 1 + z a b r2) g0 = 0
    const PowerSeries b2 = r2 * stable;
    const PowerSeries c2 = -stable + shift_up(ab * r2, 1);
    const PowerSeries rhs2(n + 1);

    auto [f0, g0] = solve_linear_2x2(b1, c1, rhs1, b2, c2, rhs2);
    f0 = f0.truncated(n);
    g0 = g0.truncated(n);
    PowerSeries fq = (shift_up(ab * g0, 1) / one_minus_za2(p, n + 1)).truncated(n);
    return {std::move(f0), std::move(g0), std::move(fq)};
}

PowerSeries double_upper_series(int j, const DoubleBoundary& b, const PowerSeries& r2,
                                const WalkParams& p, int order) {
    if (j < 0) throw std::invalid_argument("double_upper_series: negative state index");
    if (r2.order() < order + 1 || b.g0.order() < order)
        throw std::invalid_argument("double_upper_series: input orders too small");
    const Rational al = p.alpha;
    const Rational be = p.beta;
    const PowerSeries stable = one_minus_za2(p, order + 1);

    // N1 = r2 z^2 b^3 a g0 - z a^2 + z^2 a^2 b^2 g0 + 1
    PowerSeries n1 = shift_up(al * be * be * be * (r2 * b.g0), 2) +
                     shift_up(al * al * be * be * b.g0, 2) -
                     PowerSeries::monomial(al * al, 1, order + 1) +
                     PowerSeries::constant(Rational(1), order + 1);
    // [u^j]F = -r2^{j+1} N1 / (z a b (-1 + z a^2)) - r2^j z b^2 g0 / (-1 + z a^2),
    // the second term arising from the u-linear numerator part, so only
    // for j >= 1 (at j = 0 the whole expression is the u = 0 relation).
    const PowerSeries t1 =
        shift_div(-(power(r2, j + 1) * n1), 1) / (al * be) / (-stable);
    if (j == 0) return t1.truncated(order);
    const PowerSeries t2 = -(power(r2, j) * shift_up(be * be * b.g0, 1)) / (-stable);
    return (t1 + t2).truncated(order);
}

PowerSeries double_lower_series(int j, const DoubleBoundary& b, const PowerSeries& r2,
                                const WalkParams& p, int order) {
    if (j < 0) throw std::invalid_argument("double_lower_series: negative state index");
    if (r2.order() < order + 1 || b.f0.order() < order || b.g0.order() < order)
        throw std::invalid_argument("double_lower_series: input orders too small");
    const Rational al = p.alpha;
    const Rational be = p.beta;
    // [u^j]G = (-z a b g0 + z a^2 f0 - f0) / (-1 + z a^2) * r2^{j+1}
    const PowerSeries numer =
        -shift_up(al * be * b.g0, 1) + shift_up(al * al * b.f0, 1) - b.f0;
    const PowerSeries ratio = numer / (-one_minus_za2(p, order + 1));
    return (ratio * power(r2, j + 1)).truncated(order);
}

bool parity_match(const PowerSeries& single, const PowerSeries& dbl, int max_m) {
    if (dbl.order() < max_m || single.order() < 2 * max_m)
        throw std::invalid_argument("parity_match: orders too small");
    for (int m = 0; m <= max_m; ++m)
        if (dbl[m] != single[2 * m]) return false;
    return true;
}

ParityCrosscheck parity_crosscheck(int j, const WalkParams& p, int order) {
    const int single_index = 2 * j + 1;
    const int single_order = 2 * order + single_index;
    const BruteBoundary bb = solve_boundary_brute(p, single_order);
    const BruteStateTable table = states_from_boundary(bb.f0, bb.g0, p, single_index);

    const DoubleBoundary db = solve_boundary_double(p, order);
    const PowerSeries r2 = double_kernel_root(p, order + 1);
    const PowerSeries upper = double_upper_series(j, db, r2, p, order);
    const PowerSeries lower = double_lower_series(j, db, r2, p, order);

    ParityCrosscheck out;
    for (int m = 0; m <= order; ++m) {
        if (upper[m] != table.top[static_cast<size_t>(2 * j)][2 * m]) {
            out = {false, 0, m};
            return out;
        }
        if (lower[m] != table.bottom[static_cast<size_t>(2 * j + 1)][2 * m]) {
            out = {false, 1, m};
            return out;
        }
    }
    return out;
}

}  // namespace knodel
