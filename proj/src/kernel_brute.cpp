#include "knodel/kernel_brute.hpp"

#include <sstream>

namespace knodel {

namespace {

PowerSeries linear_poly(const Rational& c0, const Rational& c1, int order) {
    PowerSeries s = PowerSeries::constant(c0, order);
    if (order >= 1) s[1] = c1;
    return s;
}

struct Term {
    int uexp;
    int zexp;
    Rational coef;
};

UPoly from_terms(const std::vector<Term>& terms, int zorder) {
    UPoly u(0, zorder);
    for (const auto& t : terms) u.add_term(t.uexp, t.zexp, t.coef);
    return u;
}

}  // namespace

PowerSeries discriminant_sqrt(const WalkParams& p, int order) {
    const Rational one(1), two(2);
    const PowerSeries f1 = linear_poly(one, -one, order);
    const PowerSeries f2 = linear_poly(one, one, order);
    const PowerSeries f3 = linear_poly(one, two * p.alpha - one, order);
    const PowerSeries f4 = linear_poly(one, one - two * p.alpha, order);
    return sqrt(f1 * f2 * f3 * f4);
}

PowerSeries small_root_square(const WalkParams& p, int order) {
    if (order < 2) throw std::invalid_argument("small_root_square: order must be >= 2");
    const int n = order + 2;
    const PowerSeries w = discriminant_sqrt(p, n);
    const Rational sigma = p.alpha * p.alpha + p.beta * p.beta;
    PowerSeries numer = PowerSeries::constant(Rational(1), n) -
                        PowerSeries::monomial(sigma, 2, n) - w;
    return shift_div(numer, 2) / (Rational(2) * p.alpha * p.beta);
}

UPoly kernel_denominator(const WalkParams& p, int zorder) {
    const Rational a = p.alpha;
    const Rational a2 = a * a;
    return from_terms({{2, 0, Rational(1)},
                       {4, 2, -a},
                       {2, 2, Rational(-1)},
                       {2, 2, Rational(2) * a},
                       {4, 2, a2},
                       {2, 2, Rational(-2) * a2},
                       {0, 2, -a},
                       {0, 2, a2}},
                      zorder);
}

QuadrantNumerators quadrant_numerators(const WalkParams& p, int zorder) {
    const Rational a = p.alpha;
    const Rational a2 = a * a;
    const Rational a3 = a2 * a;
    const Rational one(1);
    const PowerSeries z1 = PowerSeries::monomial(one, 1, zorder);

    // D*F_e = u^2 - a f0 z^2 + a^2 f0 z^2 - 2 z^3 u^4 a^2 g0 + z^3 u^4 a g0
    //         + z^3 u^2 a^2 g0 + z^3 a^3 u^4 g0 - z^3 u^2 a^3 g0
    KernelNumerator even_top{
        from_terms({{2, 0, one}}, zorder),
        from_terms({{0, 2, -a}, {0, 2, a2}}, zorder),
        from_terms({{4, 3, Rational(-2) * a2}, {4, 3, a}, {2, 3, a2}, {4, 3, a3}, {2, 3, -a3}},
                   zorder)};

    // D*F_o = u z (-u^2 a^2 z g0 - f0 + a f0 + u^2 a z g0 - z^2 a^3 f0 + a u^2
    //          - a + a^3 z^2 u^2 f0 + 1 + u^2 a z^2 f0 - 2 u^2 a^2 z^2 f0
    //          + f0 z^2 - 3 a f0 z^2 + 3 a^2 f0 z^2)
    KernelNumerator odd_top{
        from_terms({{2, 0, a}, {0, 0, -a}, {0, 0, one}}, zorder)
            .scaled(z1)
            .shifted_u(1),
        from_terms({{0, 0, -one},
                    {0, 0, a},
                    {0, 2, -a3},
                    {2, 2, a3},
                    {2, 2, a},
                    {2, 2, Rational(-2) * a2},
                    {0, 2, one},
                    {0, 2, Rational(-3) * a},
                    {0, 2, Rational(3) * a2}},
                   zorder)
            .scaled(z1)
            .shifted_u(1),
        from_terms({{2, 1, -a2}, {2, 1, a}}, zorder).scaled(z1).shifted_u(1)};

    // D*G_e = -a z^2 (-a u^4 z f0 + a^2 u^4 z f0 + g0 - u^2 z f0
    //          + 2 u^2 a z f0 - a g0 - u^2 a^2 z f0)
    const PowerSeries z2 = PowerSeries::monomial(-a, 2, zorder);
    KernelNumerator even_bottom{
        UPoly(0, zorder),
        from_terms({{4, 1, -a}, {4, 1, a2}, {2, 1, -one}, {2, 1, Rational(2) * a}, {2, 1, -a2}},
                   zorder)
            .scaled(z2),
        from_terms({{0, 0, one}, {0, 0, -a}}, zorder).scaled(z2)};

    // D*G_o = -u z a (-u^2 a z^2 g0 + g0 - u^2 z f0 + u^2 a z f0
    //          + u^2 a^2 z^2 g0 - a^2 z^2 g0)
    const PowerSeries mza = PowerSeries::monomial(-a, 1, zorder);
    KernelNumerator odd_bottom{
        UPoly(0, zorder),
        from_terms({{2, 1, -one}, {2, 1, a}}, zorder).scaled(mza).shifted_u(1),
        from_terms({{2, 2, -a}, {0, 0, one}, {2, 2, a2}, {0, 2, -a2}}, zorder)
            .scaled(mza)
            .shifted_u(1)};

    return {std::move(even_top), std::move(odd_top), std::move(even_bottom),
            std::move(odd_bottom)};
}

BruteBoundary solve_boundary_brute(const WalkParams& p, int order) {
    if (order < 4) throw std::invalid_argument("solve_boundary_brute: order must be >= 4");
    const int n = order + 2;
    const PowerSeries s = small_root_square(p, n);
    const QuadrantNumerators q = quadrant_numerators(p, n);

    // Both even numerators vanish at u^2 := S; every term carries z^2.
    const auto normalised = [&](const UPoly& u) { return shift_div(u.eval_even(s), 2); };
    const PowerSeries b1 = normalised(q.even_top.f0_coef);
    const PowerSeries c1 = normalised(q.even_top.g0_coef);
    const PowerSeries r1 = -normalised(q.even_top.known);
    const PowerSeries b2 = normalised(q.even_bottom.f0_coef);
    const PowerSeries c2 = normalised(q.even_bottom.g0_coef);
    const PowerSeries r2 = -normalised(q.even_bottom.known);

    auto [f0, g0] = solve_linear_2x2(b1, c1, r1, b2, c2, r2);
    return {f0.truncated(order), g0.truncated(order)};
}

BruteStateTable states_from_boundary(const PowerSeries& f0, const PowerSeries& g0,
                                     const WalkParams& p, int max_index) {
    if (f0[0] != Rational(1))
        throw std::invalid_argument("states_from_boundary: f0(0) must be 1");
    const int n = std::min(f0.order(), g0.order());
    if (max_index < 0 || max_index > n)
        throw std::invalid_argument("states_from_boundary: max_index out of range");

    const Rational a = p.alpha;
    const Rational b = p.beta;
    BruteStateTable t;
    t.common_order = n - max_index;
    t.top.push_back(f0.truncated(n));
    t.bottom.push_back(g0.truncated(n));

    if (max_index >= 1) {
        // f0 = 1 + b^2 z^2 f0 + a z f1  and  g0 = a^2 z^2 g0 + b z g1
        PowerSeries ftop = f0 - PowerSeries::constant(Rational(1), n) -
                           (b * b) * shift_up(f0, 2);
        t.top.push_back(shift_div(ftop, 1) / a);
        PowerSeries gbot = g0 - (a * a) * shift_up(g0, 2);
        t.bottom.push_back(shift_div(gbot, 1) / b);
    }
    if (max_index >= 2) {
        // f1 = a z f0 + b z f2 + a b z^2 g0  and  g1 = b z g0 + a z g2 + a b z^2 f0
        PowerSeries f2 = t.top[1] - a * shift_up(f0, 1) - (a * b) * shift_up(g0, 2);
        t.top.push_back(shift_div(f2, 1) / b);
        PowerSeries g2 = t.bottom[1] - b * shift_up(g0, 1) - (a * b) * shift_up(f0, 2);
        t.bottom.push_back(shift_div(g2, 1) / a);
    }
    for (int i = 2; i < max_index; ++i) {
        // interior: f_i = c z f_{i-1} + d z f_{i+1} with (c, d) = (b, a) for
        // even i and (a, b) for odd i; the g recursion swaps the roles.
        const bool even = i % 2 == 0;
        const Rational& cf = even ? b : a;
        const Rational& df = even ? a : b;
        PowerSeries fn = t.top[static_cast<size_t>(i)] -
                         cf * shift_up(t.top[static_cast<size_t>(i - 1)], 1);
        t.top.push_back(shift_div(fn, 1) / df);
        const Rational& cg = even ? a : b;
        const Rational& dg = even ? b : a;
        PowerSeries gn = t.bottom[static_cast<size_t>(i)] -
                         cg * shift_up(t.bottom[static_cast<size_t>(i - 1)], 1);
        t.bottom.push_back(shift_div(gn, 1) / dg);
    }
    for (auto& s : t.top) s = s.truncated(t.common_order);
    for (auto& s : t.bottom) s = s.truncated(t.common_order);
    return t;
}

namespace {

UPoly assemble_layer(const std::vector<PowerSeries>& seq, bool even_part, int udeg, int zorder) {
    UPoly u(udeg, zorder);
    for (int j = even_part ? 0 : 1; j <= udeg; j += 2)
        u.set_coeff(j, seq[static_cast<size_t>(j)].truncated(zorder));
    return u;
}

EquationCheck named_check(const std::string& name, const UPoly& lhs, const UPoly& rhs, int udeg,
                          int zorder) {
    const auto [uj, zk] = upoly_first_mismatch(lhs, rhs, udeg, zorder);
    return {name, uj < 0, uj, zk};
}

}  // namespace

std::vector<EquationCheck> check_functional_equations(const BruteStateTable& table,
                                                      const PowerSeries& f0,
                                                      const PowerSeries& g0, const WalkParams& p,
                                                      int udeg, int zorder) {
    if (static_cast<int>(table.top.size()) <= udeg || table.common_order < zorder + 2)
        throw std::invalid_argument("check_functional_equations: table too small");
    if (f0.order() < zorder + 2 || g0.order() < zorder + 2)
        throw std::invalid_argument("check_functional_equations: boundary order too small");
    const Rational a = p.alpha;
    const Rational b = p.beta;
    const int n = zorder + 2;  // headroom so z-multiplications stay exact
    const PowerSeries az = PowerSeries::monomial(a, 1, n);
    const PowerSeries bz = PowerSeries::monomial(b, 1, n);

    const UPoly fe = assemble_layer(table.top, true, udeg, n);
    const UPoly fo = assemble_layer(table.top, false, udeg, n);
    const UPoly ge = assemble_layer(table.bottom, true, udeg, n);
    const UPoly go = assemble_layer(table.bottom, false, udeg, n);

    const PowerSeries f0n = f0.truncated(n);
    const PowerSeries g0n = g0.truncated(n);

    std::vector<EquationCheck> out;

    // u F_e = b z u^2 F_o + a z F_o + u (1 + b^2 z^2 f0)
    {
        UPoly rhs = fo.scaled(bz).shifted_u(2) + fo.scaled(az);
        UPoly tail(1, n);
        tail.set_coeff(1, PowerSeries::constant(Rational(1), n) + (b * b) * shift_up(f0n, 2).truncated(n));
        out.push_back(named_check("even-top equation", fe.shifted_u(1), rhs + tail, udeg, zorder));
    }
    // u F_o = a z u^2 F_e + b z (F_e - f0) + u^2 a b z^2 g0
    {
        UPoly fe_minus(0, n);
        fe_minus.set_coeff(0, f0n);
        UPoly rhs = fe.scaled(az).shifted_u(2) + (fe - fe_minus).scaled(bz);
        UPoly tail(2, n);
        tail.set_coeff(2, (a * b) * shift_up(g0n, 2).truncated(n));
        out.push_back(named_check("odd-top equation", fo.shifted_u(1), rhs + tail, udeg, zorder));
    }
    // u G_e = a z u^2 G_o + b z G_o + u a^2 z^2 g0
    {
        UPoly rhs = go.scaled(az).shifted_u(2) + go.scaled(bz);
        UPoly tail(1, n);
        tail.set_coeff(1, (a * a) * shift_up(g0n, 2).truncated(n));
        out.push_back(named_check("even-bottom equation", ge.shifted_u(1), rhs + tail, udeg, zorder));
    }
    // u G_o = b z u^2 G_e + a z (G_e - g0) + u^2 a b z^2 f0
    {
        UPoly ge_minus(0, n);
        ge_minus.set_coeff(0, g0n);
        UPoly rhs = ge.scaled(bz).shifted_u(2) + (ge - ge_minus).scaled(az);
        UPoly tail(2, n);
        tail.set_coeff(2, (a * b) * shift_up(f0n, 2).truncated(n));
        out.push_back(named_check("odd-bottom equation", go.shifted_u(1), rhs + tail, udeg, zorder));
    }

    // printed numerators: D * X = known + f0_coef f0 + g0_coef g0
    const UPoly d = kernel_denominator(p, n);
    const QuadrantNumerators q = quadrant_numerators(p, n);
    const auto numerator_check = [&](const std::string& name, const UPoly& x,
                                     const KernelNumerator& num) {
        const UPoly rhs = num.known + num.f0_coef.scaled(f0n) + num.g0_coef.scaled(g0n);
        out.push_back(named_check(name, d * x, rhs, udeg, zorder));
    };
    numerator_check("printed numerator even-top", fe, q.even_top);
    numerator_check("printed numerator odd-top", fo, q.odd_top);
    numerator_check("printed numerator even-bottom", ge, q.even_bottom);
    numerator_check("printed numerator odd-bottom", go, q.odd_bottom);
    return out;
}

namespace {

// The two printed factors common to both boundary closed forms, with the
// token "aW" read as alpha*W.
PowerSeries xi_factor_t(const WalkParams& p, const PowerSeries& w, int n) {
    const Rational a = p.alpha;
    const Rational a2 = a * a;
    PowerSeries poly(n);
    poly[0] = Rational(-1);
    poly[2] = Rational(3) * a2 - Rational(3) * a + Rational(2);
    poly[4] = Rational(-3) * a2 + Rational(3) * a - Rational(1);
    PowerSeries wcoef(n);
    wcoef[0] = Rational(-1);
    wcoef[2] = a2 - a + Rational(1);
    return poly + wcoef * w;
}

PowerSeries xi_factor_u(const WalkParams& p, const PowerSeries& w, int n) {
    const Rational sigma = p.alpha * p.alpha + p.beta * p.beta;
    PowerSeries poly(n);
    poly[0] = Rational(-1);
    poly[2] = sigma;
    return poly + w;
}

PowerSeries xi_factor_v(const WalkParams& p, const PowerSeries& w, int n) {
    const Rational a = p.alpha;
    const Rational a2 = a * a;
    PowerSeries poly(n);
    poly[0] = Rational(1);
    poly[2] = Rational(-3) * a2 + Rational(2) * a - Rational(1);
    poly[4] = Rational(2) * a2 * a - a2;
    PowerSeries wcoef(n);
    wcoef[0] = Rational(-1);
    wcoef[2] = a2;
    return poly + wcoef * w;
}

// (z^2 - 1)((3a^2 - 3a + 1) z^2 - 1), the polynomial part left in the
// printed denominators after the powers of z are cancelled.
PowerSeries printed_denominator_poly(const WalkParams& p, int n) {
    const Rational c = Rational(3) * p.alpha * p.alpha - Rational(3) * p.alpha + Rational(1);
    PowerSeries d(n);
    d[0] = Rational(1);
    d[2] = -(Rational(1) + c);
    d[4] = c;
    return d;
}

int first_mismatch(const PowerSeries& x, const PowerSeries& y, int through) {
    for (int k = 0; k <= through; ++k)
        if (x[k] != y[k]) return k;
    return -1;
}

}  // namespace

PrintedBoundaryReport printed_boundary_report(const WalkParams& p, int order) {
    if (order < 8) throw std::invalid_argument("printed_boundary_report: order must be >= 8");
    const Rational a = p.alpha;
    const Rational b = p.beta;
    const int n = order + 7;
    const PowerSeries w = discriminant_sqrt(p, n);
    const PowerSeries t = xi_factor_t(p, w, n);
    const PowerSeries u = xi_factor_u(p, w, n);
    const PowerSeries v = xi_factor_v(p, w, n);
    const PowerSeries den = printed_denominator_poly(p, n);

    const Rational f0_scale = Rational(4) * a * a * b * b;
    const PowerSeries f0_printed = (shift_div(t * u, 4) / den / f0_scale).truncated(order);
    const Rational g0_scale = Rational(8) * a * a * a * pow_int(b, 4);
    const PowerSeries g0_printed = (shift_div(t * v * u, 7) / den / g0_scale).truncated(order);

    const BruteBoundary solved = solve_boundary_brute(p, order);

    PrintedBoundaryReport r{order,
                            f0_printed,
                            solved.f0,
                            g0_printed,
                            solved.g0,
                            false,
                            false,
                            first_mismatch(f0_printed, solved.f0, order),
                            first_mismatch(g0_printed, solved.g0, order)};
    r.f0_match = r.f0_first_mismatch < 0;
    r.g0_match = r.g0_first_mismatch < 0;
    return r;
}

std::string PrintedBoundaryReport::text() const {
    std::ostringstream os;
    os << "printed boundary forms vs kernel solve (order " << order << ")\n";
    os << (f0_match ? "f0: MATCH to order " + std::to_string(order)
                    : "f0: MISMATCH at z^" + std::to_string(f0_first_mismatch))
       << "\n";
    os << (g0_match ? "g0: MATCH to order " + std::to_string(order)
                    : "g0: MISMATCH at z^" + std::to_string(g0_first_mismatch))
       << "\n";
    os << "  k  printed f0 | solved f0 | printed g0 | solved g0\n";
    for (int k = 0; k <= order; ++k) {
        os << "  " << k << "  " << f0_printed[k].str() << " | " << f0_solved[k].str() << " | "
           << g0_printed[k].str() << " | " << g0_solved[k].str() << "\n";
    }
    return os.str();
}

}  // namespace knodel
