#include "knodel/odd_steps.hpp"

namespace knodel {

StateDist odd_from_even(const StateDist& d, const WalkParams& p) {
    if (d.step_ % 2 != 0)
        throw ParityViolation("odd_from_even: input step count is odd");
    if (!d.extra_p_.is_zero())
        throw ParityViolation("odd_from_even: mass on the upper extra state");
    for (size_t i = 0; i < d.top_.size(); ++i) {
        const bool top_bad = i % 2 == 1 && !d.top_[i].is_zero();
        const bool bottom_bad = i % 2 == 0 && !d.bottom_[i].is_zero();
        if (top_bad || bottom_bad)
            throw ParityViolation("odd_from_even: mass outside the even parity class at index " +
                                  std::to_string(i));
    }

    const Rational& a = p.alpha;
    const Rational& b = p.beta;
    const auto top = [&](int i) { return d.prob(StateId::top(i)); };
    const auto bottom = [&](int i) { return d.prob(StateId::bottom(i)); };

    StateDist r;
    r.step_ = d.step_ + 1;
    const size_t n = d.top_.size() + 1;
    r.top_.assign(n, Rational(0));
    r.bottom_.assign(n, Rational(0));
    for (int j = 0; 2 * j + 1 < static_cast<int>(n); ++j) {
        r.top_[static_cast<size_t>(2 * j + 1)] = a * top(2 * j) + b * top(2 * j + 2);
        if (j == 0) r.top_[1] += b * d.extra_q_;
    }
    r.bottom_[0] = a * d.extra_q_ + b * bottom(1);
    for (int j = 1; 2 * j < static_cast<int>(n); ++j)
        r.bottom_[static_cast<size_t>(2 * j)] = a * bottom(2 * j - 1) + b * bottom(2 * j + 1);
    r.extra_p_ = b * top(0);
    return r;
}

PowerSeries single_series_from_double(const StateId& target, int max_steps,
                                      const DoubleLayerSeries& src, const WalkParams& p) {
    if (max_steps < 0) throw std::invalid_argument("single_series_from_double: negative steps");
    const int even_half = max_steps / 2;        // [z^{2m}] needs m <= this
    const int odd_half = (max_steps - 1) / 2;   // [z^{2m+1}] needs m <= this
    const Rational& a = p.alpha;
    const Rational& b = p.beta;

    const auto upper = [&](int j) -> const PowerSeries& {
        if (j >= static_cast<int>(src.upper.size()))
            throw std::invalid_argument("single_series_from_double: upper layer too short");
        return src.upper[static_cast<size_t>(j)];
    };
    const auto lower = [&](int j) -> const PowerSeries& {
        if (j >= static_cast<int>(src.lower.size()))
            throw std::invalid_argument("single_series_from_double: lower layer too short");
        return src.lower[static_cast<size_t>(j)];
    };
    const auto check_order = [&](const PowerSeries& s, int need) {
        if (s.order() < need)
            throw std::invalid_argument("single_series_from_double: source order too small");
        return &s;
    };

    PowerSeries out(max_steps);
    switch (target.kind) {
        case StateId::Kind::Top:
            if (target.index % 2 == 0) {
                const PowerSeries& f = *check_order(upper(target.index / 2), even_half);
                for (int m = 0; 2 * m <= max_steps; ++m) out[2 * m] = f[m];
            } else {
                const int j = (target.index - 1) / 2;
                const PowerSeries& fj = *check_order(upper(j), odd_half);
                const PowerSeries& fj1 = *check_order(upper(j + 1), odd_half);
                check_order(src.extra, odd_half);
                for (int m = 0; 2 * m + 1 <= max_steps; ++m) {
                    out[2 * m + 1] = a * fj[m] + b * fj1[m];
                    if (j == 0) out[2 * m + 1] += b * src.extra[m];
                }
            }
            break;
        case StateId::Kind::Bottom:
            if (target.index % 2 == 1) {
                const PowerSeries& g = *check_order(lower((target.index - 1) / 2), even_half);
                for (int m = 0; 2 * m <= max_steps; ++m) out[2 * m] = g[m];
            } else if (target.index == 0) {
                const PowerSeries& g0 = *check_order(lower(0), odd_half);
                check_order(src.extra, odd_half);
                for (int m = 0; 2 * m + 1 <= max_steps; ++m)
                    out[2 * m + 1] = a * src.extra[m] + b * g0[m];
            } else {
                const int j = target.index / 2;
                const PowerSeries& gl = *check_order(lower(j - 1), odd_half);
                const PowerSeries& gr = *check_order(lower(j), odd_half);
                for (int m = 0; 2 * m + 1 <= max_steps; ++m)
                    out[2 * m + 1] = a * gl[m] + b * gr[m];
            }
            break;
        case StateId::Kind::ExtraP: {
            const PowerSeries& f0 = *check_order(upper(0), odd_half);
            for (int m = 0; 2 * m + 1 <= max_steps; ++m) out[2 * m + 1] = b * f0[m];
            break;
        }
        case StateId::Kind::ExtraQ:
            check_order(src.extra, even_half);
            for (int m = 0; 2 * m <= max_steps; ++m) out[2 * m] = src.extra[m];
            break;
    }
    return out;
}

}  // namespace knodel
