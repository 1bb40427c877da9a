#include "knodel/power_series.hpp"

#include <algorithm>
#include <ostream>

namespace knodel {

namespace {

int min_order(const PowerSeries& a, const PowerSeries& b) {
    return std::min(a.order(), b.order());
}

}  // namespace

PowerSeries::PowerSeries(int order) {
    if (order < 0) throw std::invalid_argument("PowerSeries: negative order");
    c_.assign(static_cast<size_t>(order) + 1, Rational(0));
}

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("PowerSeries: empty coefficient vector");
}

PowerSeries PowerSeries::constant(const Rational& c, int order) {
    PowerSeries s(order);
    s.c_[0] = c;
    return s;
}

PowerSeries PowerSeries::monomial(const Rational& c, int exp, int order) {
    if (exp < 0 || exp > order) throw std::invalid_argument("PowerSeries::monomial: exponent out of range");
    PowerSeries s(order);
    s.c_[static_cast<size_t>(exp)] = c;
    return s;
}

bool PowerSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.is_zero(); });
}

PowerSeries PowerSeries::truncated(int new_order) const {
    if (new_order < 0 || new_order > order())
        throw std::invalid_argument("PowerSeries::truncated: bad order");
    return PowerSeries(std::vector<Rational>(c_.begin(), c_.begin() + new_order + 1));
}

PowerSeries PowerSeries::operator-() const {
    PowerSeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    const int n = min_order(a, b);
    PowerSeries r(n);
    for (int k = 0; k <= n; ++k) r.c_[static_cast<size_t>(k)] = a[k] + b[k];
    return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    const int n = min_order(a, b);
    PowerSeries r(n);
    for (int k = 0; k <= n; ++k) r.c_[static_cast<size_t>(k)] = a[k] - b[k];
    return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const int n = min_order(a, b);
    PowerSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b[j].is_zero()) continue;
            r.c_[static_cast<size_t>(i + j)] += a[i] * b[j];
        }
    }
    return r;
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
    if (b[0].is_zero()) throw ZeroConstantTerm("series division: divisor has zero constant term");
    const int n = min_order(a, b);
    PowerSeries q(n);
    for (int k = 0; k <= n; ++k) {
        Rational acc = a[k];
        for (int j = 1; j <= k; ++j) acc -= b[j] * q[k - j];
        q.c_[static_cast<size_t>(k)] = acc / b[0];
    }
    return q;
}

PowerSeries operator*(const Rational& c, const PowerSeries& a) {
    PowerSeries r = a;
    for (auto& x : r.c_) x *= c;
    return r;
}

PowerSeries operator/(const PowerSeries& a, const Rational& c) {
    if (c.is_zero()) throw std::domain_error("series: division by zero rational");
    PowerSeries r = a;
    for (auto& x : r.c_) x /= c;
    return r;
}

std::ostream& operator<<(std::ostream& os, const PowerSeries& s) {
    os << "[";
    for (int k = 0; k <= s.order(); ++k) {
        if (k > 0) os << ", ";
        os << s[k];
    }
    return os << "]";
}

bool agree_through(const PowerSeries& a, const PowerSeries& b, int through) {
    if (a.order() < through || b.order() < through)
        throw std::invalid_argument("agree_through: order too small");
    for (int k = 0; k <= through; ++k)
        if (a[k] != b[k]) return false;
    return true;
}

PowerSeries shift_div(const PowerSeries& a, int k) {
    if (k < 0 || k > a.order()) throw std::invalid_argument("shift_div: bad shift");
    for (int j = 0; j < k; ++j)
        if (!a[j].is_zero())
            throw InexactCancellation("shift_div: coefficient " + std::to_string(j) +
                                      " is " + a[j].str() + ", expected 0");
    return PowerSeries(std::vector<Rational>(a.coeffs().begin() + k, a.coeffs().end()));
}

PowerSeries shift_up(const PowerSeries& a, int k) {
    if (k < 0) throw std::invalid_argument("shift_up: negative shift");
    std::vector<Rational> c(static_cast<size_t>(a.order() + k) + 1, Rational(0));
    for (int j = 0; j <= a.order(); ++j) c[static_cast<size_t>(j + k)] = a[j];
    return PowerSeries(std::move(c));
}

PowerSeries sqrt(const PowerSeries& a) {
    if (a.is_zero()) return PowerSeries(a.order());
    const auto root0 = exact_sqrt(a[0]);
    if (!root0 || root0->is_zero())
        throw NonSquareConstant("series sqrt: constant term " + a[0].str() +
                                " has no nonzero rational square root");
    const Rational half(1, 2);
    PowerSeries s = PowerSeries::constant(*root0, a.order());
    // Newton doubles the number of correct coefficients per step; the
    // fixed point is reached after ceil(log2(order+1)) steps.
    for (int guard = 0;; ++guard) {
        if (guard > 2 * a.order() + 8) throw std::logic_error("series sqrt: no convergence");
        PowerSeries next = half * (s + a / s);
        if (next == s) break;
        s = std::move(next);
    }
    return s;
}

PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner) {
    if (!inner[0].is_zero())
        throw NonzeroInnerConstant("compose: inner constant term is " + inner[0].str());
    const int n = min_order(outer, inner);
    const PowerSeries in = inner.order() == n ? inner : inner.truncated(n);
    PowerSeries r = PowerSeries::constant(outer[n], n);
    for (int k = n - 1; k >= 0; --k) r = r * in + PowerSeries::constant(outer[k], n);
    return r;
}

PowerSeries revert(const PowerSeries& a) {
    const int n = a.order();
    if (n < 1 || !a[0].is_zero() || a[1].is_zero())
        throw NotRevertible("revert: need a(0) = 0 and a'(0) != 0");
    // Derivative zero-extended to full order; the unknown top coefficient
    // only influences quotient coefficients beyond the truncation.
    std::vector<Rational> dc(static_cast<size_t>(n) + 1, Rational(0));
    for (int k = 1; k <= n; ++k) dc[static_cast<size_t>(k - 1)] = Rational(k) * a[k];
    const PowerSeries da{std::move(dc)};
    const PowerSeries z = PowerSeries::variable(n);
    PowerSeries b = PowerSeries::monomial(Rational(1) / a[1], 1, n);
    for (int guard = 0;; ++guard) {
        if (guard > 2 * n + 8) throw std::logic_error("revert: no convergence");
        PowerSeries err = compose(a, b) - z;
        if (err.is_zero()) break;
        b = b - err / compose(da, b);
    }
    return b;
}

PowerSeries derivative(const PowerSeries& a) {
    if (a.order() < 1) throw std::invalid_argument("derivative: order must be >= 1");
    std::vector<Rational> c(static_cast<size_t>(a.order()), Rational(0));
    for (int k = 1; k <= a.order(); ++k) c[static_cast<size_t>(k - 1)] = Rational(k) * a[k];
    return PowerSeries(std::move(c));
}

std::pair<PowerSeries, PowerSeries> solve_linear_2x2(const PowerSeries& b1, const PowerSeries& c1,
                                                     const PowerSeries& r1, const PowerSeries& b2,
                                                     const PowerSeries& c2, const PowerSeries& r2) {
    const PowerSeries det = b1 * c2 - b2 * c1;
    if (det[0].is_zero()) throw SingularSystem("solve_linear_2x2: determinant vanishes at z = 0");
    PowerSeries x = (r1 * c2 - r2 * c1) / det;
    PowerSeries y = (b1 * r2 - b2 * r1) / det;
    return {std::move(x), std::move(y)};
}

}  // namespace knodel
