#include "knodel/upoly.hpp"

#include <algorithm>

namespace knodel {

UPoly::UPoly(int udeg, int zorder) : zorder_(zorder), zero_(zorder) {
    if (udeg < 0) throw std::invalid_argument("UPoly: negative u-degree");
    c_.assign(static_cast<size_t>(udeg) + 1, zero_);
}

const PowerSeries& UPoly::coeff(int j) const {
    if (j < 0) throw std::invalid_argument("UPoly::coeff: negative degree");
    if (j > udeg()) return zero_;
    return c_[static_cast<size_t>(j)];
}

void UPoly::set_coeff(int j, const PowerSeries& s) {
    if (j < 0) throw std::invalid_argument("UPoly::set_coeff: negative degree");
    if (s.order() < zorder_) throw std::invalid_argument("UPoly::set_coeff: z-order too small");
    while (j > udeg()) c_.push_back(zero_);
    c_[static_cast<size_t>(j)] = s.order() == zorder_ ? s : s.truncated(zorder_);
}

void UPoly::add_term(int uexp, int zexp, const Rational& c) {
    if (uexp < 0 || zexp < 0 || zexp > zorder_)
        throw std::invalid_argument("UPoly::add_term: exponent out of range");
    while (uexp > udeg()) c_.push_back(zero_);
    c_[static_cast<size_t>(uexp)][zexp] += c;
}

bool UPoly::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const PowerSeries& s) { return s.is_zero(); });
}

bool UPoly::even_in_u() const {
    for (int j = 1; j <= udeg(); j += 2)
        if (!c_[static_cast<size_t>(j)].is_zero()) return false;
    return true;
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& s : r.c_) s = -s;
    return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.udeg(), b.udeg()), std::min(a.zorder(), b.zorder()));
    for (int j = 0; j <= r.udeg(); ++j) r.set_coeff(j, (a.coeff(j) + b.coeff(j)).truncated(r.zorder()));
    return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
    UPoly r(a.udeg() + b.udeg(), std::min(a.zorder(), b.zorder()));
    for (int i = 0; i <= a.udeg(); ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; j <= b.udeg(); ++j) {
            if (b.coeff(j).is_zero()) continue;
            r.set_coeff(i + j, r.coeff(i + j) + a.coeff(i) * b.coeff(j));
        }
    }
    return r;
}

UPoly UPoly::scaled(const PowerSeries& s) const {
    UPoly r(udeg(), std::min(zorder_, s.order()));
    for (int j = 0; j <= udeg(); ++j) r.set_coeff(j, c_[static_cast<size_t>(j)] * s);
    return r;
}

UPoly UPoly::scaled(const Rational& c) const {
    UPoly r = *this;
    for (auto& s : r.c_) s = c * s;
    return r;
}

UPoly UPoly::shifted_u(int k) const {
    if (k < 0) throw std::invalid_argument("UPoly::shifted_u: negative shift");
    UPoly r(udeg() + k, zorder_);
    for (int j = 0; j <= udeg(); ++j) r.set_coeff(j + k, c_[static_cast<size_t>(j)]);
    return r;
}

PowerSeries UPoly::eval_at(const PowerSeries& s) const {
    PowerSeries acc = c_.back().truncated(std::min(zorder_, s.order()));
    for (int j = udeg() - 1; j >= 0; --j) acc = acc * s + c_[static_cast<size_t>(j)];
    return acc;
}

PowerSeries UPoly::eval_even(const PowerSeries& s) const {
    if (!even_in_u()) throw std::invalid_argument("UPoly::eval_even: polynomial is not even in u");
    const int n = std::min(zorder_, s.order());
    PowerSeries acc(n);
    for (int j = udeg() / 2 * 2; j >= 0; j -= 2) acc = acc * s + c_[static_cast<size_t>(j)];
    return acc;
}

bool upoly_agree(const UPoly& a, const UPoly& b, int udeg_limit, int zorder_limit) {
    return upoly_first_mismatch(a, b, udeg_limit, zorder_limit) == std::pair<int, int>{-1, -1};
}

std::pair<int, int> upoly_first_mismatch(const UPoly& a, const UPoly& b, int udeg_limit,
                                         int zorder_limit) {
    if (zorder_limit > std::min(a.zorder(), b.zorder()))
        throw std::invalid_argument("upoly_first_mismatch: z-order limit too large");
    for (int j = 0; j <= udeg_limit; ++j)
        for (int k = 0; k <= zorder_limit; ++k)
            if (a.coeff(j)[k] != b.coeff(j)[k]) return {j, k};
    return {-1, -1};
}

}  // namespace knodel
