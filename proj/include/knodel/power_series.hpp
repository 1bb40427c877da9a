#pragma once

#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <utility>
#include <vector>

#include "knodel/rational.hpp"

namespace knodel {

struct SeriesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// Division by a series with zero constant term.
struct ZeroConstantTerm : SeriesError {
    using SeriesError::SeriesError;
};
/// Square root of a series whose constant term has no rational root.
struct NonSquareConstant : SeriesError {
    using SeriesError::SeriesError;
};
/// A division by z^k met a nonzero low-order coefficient. In this code
/// base that always means a formula was transcribed wrongly upstream.
struct InexactCancellation : SeriesError {
    using SeriesError::SeriesError;
};
/// Composition with an inner series whose constant term is nonzero.
struct NonzeroInnerConstant : SeriesError {
    using SeriesError::SeriesError;
};
/// Reversion of a series with a(0) != 0 or a'(0) == 0.
struct NotRevertible : SeriesError {
    using SeriesError::SeriesError;
};
/// 2x2 series system whose determinant has zero constant term.
struct SingularSystem : SeriesError {
    using SeriesError::SeriesError;
};

/// Truncated formal power series with exact rational coefficients.
///
/// coefficient(k) is known for 0 <= k <= order(); coefficients beyond the
/// order are unknown, not zero. Binary operations truncate to the smaller
/// operand order, so equality of two results is never asserted past what
/// both sides actually know. Values are immutable in normal use and all
/// operations are pure.
class PowerSeries {
public:
    /// Zero series of the given order (order >= 0).
    explicit PowerSeries(int order);
    /// Takes the coefficient vector verbatim; order = coeffs.size() - 1.
    explicit PowerSeries(std::vector<Rational> coeffs);

    static PowerSeries constant(const Rational& c, int order);
    /// c * z^exp, exp <= order.
    static PowerSeries monomial(const Rational& c, int exp, int order);
    /// The series z.
    static PowerSeries variable(int order) { return monomial(Rational(1), 1, order); }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& operator[](int k) const { return c_.at(static_cast<size_t>(k)); }
    Rational& operator[](int k) { return c_.at(static_cast<size_t>(k)); }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    /// Copy truncated to new_order <= order().
    PowerSeries truncated(int new_order) const;

    PowerSeries operator-() const;
    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    /// Cauchy product at the smaller order.
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    /// Exact series division; requires b(0) != 0 (ZeroConstantTerm).
    friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);

    friend PowerSeries operator*(const Rational& c, const PowerSeries& a);
    friend PowerSeries operator*(const PowerSeries& a, const Rational& c) { return c * a; }
    friend PowerSeries operator/(const PowerSeries& a, const Rational& c);

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PowerSeries& a, const PowerSeries& b) { return !(a == b); }

private:
    std::vector<Rational> c_;  // size = order + 1
};

std::ostream& operator<<(std::ostream& os, const PowerSeries& s);

/// True when a and b agree exactly on coefficients 0..through (both must
/// know that many).
bool agree_through(const PowerSeries& a, const PowerSeries& b, int through);

/// Exact division by z^k: requires coefficients 0..k-1 to vanish
/// (InexactCancellation otherwise) and k <= order. Result order drops by k.
PowerSeries shift_div(const PowerSeries& a, int k);

/// Multiplication by z^k. Order grows by k; no information is lost.
PowerSeries shift_up(const PowerSeries& a, int k);

/// Square root with positive constant term; a(0) must be a nonzero
/// rational square (NonSquareConstant). Newton iteration s -> (s + a/s)/2.
PowerSeries sqrt(const PowerSeries& a);

/// outer(inner); requires inner(0) == 0 (NonzeroInnerConstant).
PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner);

/// Compositional inverse b with a(b(z)) = z; requires a(0) = 0 and
/// a'(0) != 0 (NotRevertible).
PowerSeries revert(const PowerSeries& a);

/// Termwise derivative; order drops by one (requires order >= 1).
PowerSeries derivative(const PowerSeries& a);

/// Solves b1*x + c1*y = r1, b2*x + c2*y = r2 over the series ring.
/// The determinant b1*c2 - b2*c1 must have a nonzero constant term
/// (SingularSystem).
std::pair<PowerSeries, PowerSeries> solve_linear_2x2(const PowerSeries& b1, const PowerSeries& c1,
                                                     const PowerSeries& r1, const PowerSeries& b2,
                                                     const PowerSeries& c2, const PowerSeries& r2);

}  // namespace knodel
