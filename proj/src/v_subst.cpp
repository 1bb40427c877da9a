#include "knodel/v_subst.hpp"

namespace knodel {

namespace {

using Poly = std::vector<Rational>;

Poly pmul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

Poly pscale(const Poly& a, const Rational& c) {
    Poly r = a;
    for (auto& x : r) x *= c;
    return r;
}

// multiply by v^k
Poly pshift(const Poly& a, int k) {
    Poly r(a.size() + static_cast<size_t>(k), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i + static_cast<size_t>(k)] = a[i];
    return r;
}

PowerSeries as_series(const Poly& a, int order) {
    PowerSeries s(order);
    for (size_t i = 0; i < a.size() && i <= static_cast<size_t>(order); ++i)
        s[static_cast<int>(i)] = a[i];
    return s;
}

// (alpha + beta v)(beta + alpha v), the denominator of z(v)
Poly base_denominator(const WalkParams& p) {
    return {p.alpha * p.beta, p.alpha * p.alpha + p.beta * p.beta, p.alpha * p.beta};
}

// alpha beta (1 - v^3)
Poly cube_denominator(const WalkParams& p) {
    const Rational ab = p.alpha * p.beta;
    return {ab, Rational(0), Rational(0), -ab};
}

}  // namespace

PowerSeries RationalFunction::series(int order) const {
    if (den.empty() || den[0].is_zero())
        throw ZeroConstantTerm("RationalFunction: denominator vanishes at v = 0");
    return as_series(num, order) / as_series(den, order);
}

RationalFunction substitution_map(const WalkParams& p) {
    return {{Rational(0), Rational(1)}, base_denominator(p)};
}

ClosedForms closed_forms(const WalkParams& p) {
    const Rational a = p.alpha;
    const Rational b = p.beta;
    const Rational ab = a * b;
    const Rational sigma = a * a + b * b;

    // f0 = (va + b)(a + vb) / (a b (1 - v)(v^2 + v + 1))
    RationalFunction f0{base_denominator(p), cube_denominator(p)};
    // g0 = v (a + a v^2 + v b)(va + b) / (a b (1 - v)(v^2 + v + 1))
    RationalFunction g0{pshift({ab, sigma, Rational(2) * ab, a * a}, 1), cube_denominator(p)};
    // expected end = v (va + b)(3 v^2 b + 3 a + 3 v b + v a + a v^2 + a v^3)
    //              / (a b (1 - v)^3 (1 + v + v^2))
    const Poly upnum = pmul({b, a}, {Rational(3) * a, a + Rational(3) * b, a + Rational(3) * b, a});
    RationalFunction ee{pshift(upnum, 1),
                        pscale(pmul(pmul({Rational(1), Rational(-1)}, {Rational(1), Rational(-1)}),
                                    {Rational(1), Rational(0), Rational(0), Rational(-1)}),
                               ab)};
    return {p, std::move(f0), std::move(g0), std::move(ee)};
}

RationalFunction ClosedForms::upper_state(int j) const {
    if (j < 0) throw std::invalid_argument("upper_state: negative index");
    if (j == 0) return f0;
    const Rational a = params.alpha;
    const Rational b = params.beta;
    // [u^j] of the upper bivariate form, j >= 1:
    // v^j (va + b)(a + vb + b v^2) / (a b (1 - v^3))
    return {pshift({a * b, a * a + b * b, b, a * b}, j), cube_denominator(params)};
}

RationalFunction ClosedForms::lower_state(int j) const {
    if (j < 0) throw std::invalid_argument("lower_state: negative index");
    const Rational a = params.alpha;
    const Rational b = params.beta;
    // v^{j+1} (a + a v^2 + v b)(va + b) / (a b (1 - v^3))
    return {pshift({a * b, a * a + b * b, Rational(2) * a * b, a * a}, j + 1),
            cube_denominator(params)};
}

Rational transfer_coeff(const RationalFunction& h, int n, const WalkParams& p) {
    return transfer_coeff_dpow(h, n, p, n - 1);
}

Rational transfer_coeff_dpow(const RationalFunction& h, int n, const WalkParams& p, int dpow) {
    if (n < 0) throw std::invalid_argument("transfer_coeff: negative order");
    const Rational ab = p.alpha * p.beta;
    PowerSeries jac(n);  // a b (1 - v^2)
    jac[0] = ab;
    if (n >= 2) jac[2] = -ab;
    PowerSeries acc = jac * h.series(n);
    const PowerSeries dd = as_series(base_denominator(p), n);
    if (dpow >= 0) {
        for (int i = 0; i < dpow; ++i) acc = acc * dd;
    } else {
        const PowerSeries inv = PowerSeries::constant(Rational(1), n) / dd;
        for (int i = 0; i < -dpow; ++i) acc = acc * inv;
    }
    return acc[n];
}

PowerSeries transfer_series(const RationalFunction& h, int order, const WalkParams& p) {
    const Rational ab = p.alpha * p.beta;
    PowerSeries jac(order);
    jac[0] = ab;
    if (order >= 2) jac[2] = -ab;
    const PowerSeries dd = as_series(base_denominator(p), order);
    // acc after the division is a b (1 - v^2) H(v) D(v)^{-1}; multiplying by
    // D once per step keeps acc = ... D^{N-1} when the N-th coefficient is read.
    PowerSeries acc = jac * h.series(order) / dd;
    PowerSeries out(order);
    out[0] = acc[0];
    for (int n = 1; n <= order; ++n) {
        acc = acc * dd;
        out[n] = acc[n];
    }
    return out;
}

PowerSeries v_of_z(const WalkParams& p, int order) {
    if (order < 1) throw std::invalid_argument("v_of_z: order must be >= 1");
    return revert(substitution_map(p).series(order));
}

}  // namespace knodel
