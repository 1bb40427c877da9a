#pragma once

#include <vector>

#include "knodel/power_series.hpp"

namespace knodel {

/// Polynomial in the catalytic variable u whose coefficients are power
/// series in z. All coefficients share one z-truncation order; binary
/// operations re-truncate to the smaller one. In u the object is a plain
/// polynomial (coefficients beyond the stored degree are zero).
class UPoly {
public:
    UPoly(int udeg, int zorder);

    int udeg() const { return static_cast<int>(c_.size()) - 1; }
    int zorder() const { return zorder_; }

    /// Zero beyond the stored degree.
    const PowerSeries& coeff(int j) const;
    /// s is truncated to the common z-order; j may extend the degree.
    void set_coeff(int j, const PowerSeries& s);
    /// Adds c * u^uexp * z^zexp. Used to transcribe polynomial displays
    /// term by term.
    void add_term(int uexp, int zexp, const Rational& c);

    bool is_zero() const;
    bool even_in_u() const;

    UPoly operator-() const;
    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);

    /// Multiplies every coefficient by s.
    UPoly scaled(const PowerSeries& s) const;
    UPoly scaled(const Rational& c) const;
    /// Multiplication by u^k.
    UPoly shifted_u(int k) const;

    /// Substitutes u := s (Horner over the series ring).
    PowerSeries eval_at(const PowerSeries& s) const;
    /// Substitutes u^2 := s; requires the polynomial to be even in u.
    PowerSeries eval_even(const PowerSeries& s) const;

private:
    std::vector<PowerSeries> c_;
    int zorder_;
    PowerSeries zero_;  // shared zero of the common order
};

/// Coefficientwise equality for u-degrees 0..udeg_limit and z-orders
/// 0..zorder_limit. Coefficients beyond a stored degree count as zero.
bool upoly_agree(const UPoly& a, const UPoly& b, int udeg_limit, int zorder_limit);

/// First (u-degree, z-order) where a and b differ within the limits, or
/// {-1, -1} when they agree.
std::pair<int, int> upoly_first_mismatch(const UPoly& a, const UPoly& b, int udeg_limit,
                                         int zorder_limit);

}  // namespace knodel
