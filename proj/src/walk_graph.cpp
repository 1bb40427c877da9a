#include "knodel/walk_graph.hpp"

#include <algorithm>

namespace knodel {

std::string StateId::str() const {
    switch (kind) {
        case Kind::Top: return "top:" + std::to_string(index);
        case Kind::Bottom: return "bottom:" + std::to_string(index);
        case Kind::ExtraP: return "P";
        case Kind::ExtraQ: return "Q";
    }
    return "?";
}

StateId DoubleStateId::to_single() const {
    switch (kind) {
        case Kind::Upper: return StateId::top(2 * index);
        case Kind::Lower: return StateId::bottom(2 * index + 1);
        case Kind::Extra: return StateId::extra_q();
    }
    return StateId::top(0);
}

std::string DoubleStateId::str() const {
    switch (kind) {
        case Kind::Upper: return "top:" + std::to_string(index);
        case Kind::Lower: return "bottom:" + std::to_string(index);
        case Kind::Extra: return "Q";
    }
    return "?";
}

StateDist StateDist::initial() {
    StateDist d;
    d.top_.assign(1, Rational(1));
    d.bottom_.assign(1, Rational(0));
    return d;
}

StateDist StateDist::from_support(int step,
                                  const std::vector<std::pair<StateId, Rational>>& mass) {
    if (step < 0) throw std::invalid_argument("StateDist: negative step");
    StateDist d;
    d.step_ = step;
    int max_index = 0;
    for (const auto& [id, m] : mass) max_index = std::max(max_index, id.index);
    d.top_.assign(static_cast<size_t>(max_index) + 1, Rational(0));
    d.bottom_.assign(static_cast<size_t>(max_index) + 1, Rational(0));
    for (const auto& [id, m] : mass) {
        if (m.sign() < 0) throw std::invalid_argument("StateDist: negative probability");
        switch (id.kind) {
            case StateId::Kind::Top:
                if (id.index > step && m.sign() > 0)
                    throw std::invalid_argument("StateDist: support exceeds step bound");
                d.top_[static_cast<size_t>(id.index)] += m;
                break;
            case StateId::Kind::Bottom:
                if (id.index > step && m.sign() > 0)
                    throw std::invalid_argument("StateDist: support exceeds step bound");
                d.bottom_[static_cast<size_t>(id.index)] += m;
                break;
            case StateId::Kind::ExtraP: d.extra_p_ += m; break;
            case StateId::Kind::ExtraQ: d.extra_q_ += m; break;
        }
    }
    if (d.total_mass() != Rational(1))
        throw std::invalid_argument("StateDist: probabilities must sum to 1");
    return d;
}

Rational StateDist::prob(const StateId& s) const {
    switch (s.kind) {
        case StateId::Kind::Top:
            return s.index <= max_index() ? top_[static_cast<size_t>(s.index)] : Rational(0);
        case StateId::Kind::Bottom:
            return s.index <= max_index() ? bottom_[static_cast<size_t>(s.index)] : Rational(0);
        case StateId::Kind::ExtraP: return extra_p_;
        case StateId::Kind::ExtraQ: return extra_q_;
    }
    return Rational(0);
}

Rational StateDist::total_mass() const {
    Rational t = extra_p_ + extra_q_;
    for (const auto& x : top_) t += x;
    for (const auto& x : bottom_) t += x;
    return t;
}

StateDist single_step(const StateDist& d, const WalkParams& p) {
    const Rational& a = p.alpha;
    const Rational& b = p.beta;
    const size_t n = d.top_.size() + 1;
    StateDist r;
    r.step_ = d.step_ + 1;
    r.top_.assign(n, Rational(0));
    r.bottom_.assign(n, Rational(0));
    for (size_t i = 0; i < d.top_.size(); ++i) {
        const Rational& t = d.top_[i];
        if (t.is_zero()) continue;
        if (i == 0) {
            r.top_[1] += a * t;
            r.extra_p_ += b * t;
        } else if (i % 2 == 1) {
            r.top_[i - 1] += a * t;
            r.top_[i + 1] += b * t;
        } else {
            r.top_[i - 1] += b * t;
            r.top_[i + 1] += a * t;
        }
    }
    for (size_t i = 0; i < d.bottom_.size(); ++i) {
        const Rational& g = d.bottom_[i];
        if (g.is_zero()) continue;
        if (i == 0) {
            r.extra_q_ += a * g;
            r.bottom_[1] += b * g;
        } else if (i % 2 == 1) {
            r.bottom_[i - 1] += b * g;
            r.bottom_[i + 1] += a * g;
        } else {
            r.bottom_[i - 1] += a * g;
            r.bottom_[i + 1] += b * g;
        }
    }
    if (!d.extra_p_.is_zero()) {
        r.top_[0] += b * d.extra_p_;
        r.bottom_[1] += a * d.extra_p_;
    }
    if (!d.extra_q_.is_zero()) {
        r.top_[1] += b * d.extra_q_;
        r.bottom_[0] += a * d.extra_q_;
    }
    return r;
}

DoubleStateDist DoubleStateDist::initial() {
    DoubleStateDist d;
    d.upper_.assign(1, Rational(1));
    d.lower_.assign(1, Rational(0));
    return d;
}

Rational DoubleStateDist::prob(const DoubleStateId& s) const {
    switch (s.kind) {
        case DoubleStateId::Kind::Upper:
            return s.index <= max_index() ? upper_[static_cast<size_t>(s.index)] : Rational(0);
        case DoubleStateId::Kind::Lower:
            return s.index <= max_index() ? lower_[static_cast<size_t>(s.index)] : Rational(0);
        case DoubleStateId::Kind::Extra: return extra_;
    }
    return Rational(0);
}

Rational DoubleStateDist::total_mass() const {
    Rational t = extra_;
    for (const auto& x : upper_) t += x;
    for (const auto& x : lower_) t += x;
    return t;
}

Rational DoubleStateDist::expected_index() const {
    Rational e(0);
    for (size_t k = 0; k < upper_.size(); ++k) e += Rational(2 * static_cast<long>(k)) * upper_[k];
    for (size_t k = 0; k < lower_.size(); ++k)
        e += Rational(2 * static_cast<long>(k) + 1) * lower_[k];
    return e;
}

DoubleStateDist double_step(const DoubleStateDist& d, const WalkParams& p) {
    const Rational ab = p.alpha * p.beta;
    const Rational stay = p.alpha * p.alpha + p.beta * p.beta;  // 1 - 2*alpha*beta
    const size_t n = d.upper_.size() + 1;
    DoubleStateDist r;
    r.step_ = d.step_ + 1;
    r.upper_.assign(n, Rational(0));
    r.lower_.assign(n, Rational(0));
    for (size_t k = 0; k < d.upper_.size(); ++k) {
        const Rational& f = d.upper_[k];
        if (f.is_zero()) continue;
        r.upper_[k] += stay * f;
        r.upper_[k + 1] += ab * f;
        if (k == 0)
            r.lower_[0] += ab * f;
        else
            r.upper_[k - 1] += ab * f;
    }
    for (size_t k = 0; k < d.lower_.size(); ++k) {
        const Rational& g = d.lower_[k];
        if (g.is_zero()) continue;
        r.lower_[k] += stay * g;
        r.lower_[k + 1] += ab * g;
        if (k == 0)
            r.extra_ += ab * g;
        else
            r.lower_[k - 1] += ab * g;
    }
    if (!d.extra_.is_zero()) {
        r.upper_[0] += ab * d.extra_;
        r.upper_[1] += p.beta * p.beta * d.extra_;
        r.lower_[0] += ab * d.extra_;
        r.extra_ += p.alpha * p.alpha * d.extra_;
    }
    return r;
}

bool matches_single(const DoubleStateDist& dd, const StateDist& sd) {
    const int m = std::max(dd.max_index(), sd.max_index()) + 1;
    for (int k = 0; k <= m; ++k) {
        if (dd.prob(DoubleStateId::upper(k)) != sd.prob(StateId::top(2 * k))) return false;
        if (dd.prob(DoubleStateId::lower(k)) != sd.prob(StateId::bottom(2 * k + 1))) return false;
        // single-step odd-class states must be empty after an even number of steps
        if (!sd.prob(StateId::top(2 * k + 1)).is_zero()) return false;
        if (!sd.prob(StateId::bottom(2 * k)).is_zero()) return false;
    }
    if (dd.prob(DoubleStateId::extra()) != sd.prob(StateId::extra_q())) return false;
    return sd.prob(StateId::extra_p()).is_zero();
}

bool same_distribution(const StateDist& a, const StateDist& b) {
    if (a.step() != b.step()) return false;
    const int m = std::max(a.max_index(), b.max_index());
    for (int i = 0; i <= m; ++i) {
        if (a.prob(StateId::top(i)) != b.prob(StateId::top(i))) return false;
        if (a.prob(StateId::bottom(i)) != b.prob(StateId::bottom(i))) return false;
    }
    return a.prob(StateId::extra_p()) == b.prob(StateId::extra_p()) &&
           a.prob(StateId::extra_q()) == b.prob(StateId::extra_q());
}

PowerSeries state_series(const StateId& target, int max_steps, const WalkParams& p) {
    if (max_steps < 0) throw std::invalid_argument("state_series: negative step count");
    PowerSeries s(max_steps);
    StateDist d = StateDist::initial();
    s[0] = d.prob(target);
    for (int n = 1; n <= max_steps; ++n) {
        d = single_step(d, p);
        s[n] = d.prob(target);
    }
    return s;
}

PowerSeries double_state_series(const DoubleStateId& target, int max_double_steps,
                                const WalkParams& p) {
    if (max_double_steps < 0) throw std::invalid_argument("double_state_series: negative steps");
    PowerSeries s(max_double_steps);
    DoubleStateDist d = DoubleStateDist::initial();
    s[0] = d.prob(target);
    for (int n = 1; n <= max_double_steps; ++n) {
        d = double_step(d, p);
        s[n] = d.prob(target);
    }
    return s;
}

PowerSeries expected_end_series(int max_double_steps, const WalkParams& p) {
    if (max_double_steps < 0) throw std::invalid_argument("expected_end_series: negative steps");
    PowerSeries s(max_double_steps);
    DoubleStateDist d = DoubleStateDist::initial();
    s[0] = d.expected_index();
    for (int n = 1; n <= max_double_steps; ++n) {
        d = double_step(d, p);
        s[n] = d.expected_index();
    }
    return s;
}

SingleLayerSeries single_layer_series(int max_index, int max_steps, const WalkParams& p) {
    SingleLayerSeries out{std::vector<PowerSeries>(static_cast<size_t>(max_index) + 1,
                                                   PowerSeries(max_steps)),
                          std::vector<PowerSeries>(static_cast<size_t>(max_index) + 1,
                                                   PowerSeries(max_steps)),
                          PowerSeries(max_steps), PowerSeries(max_steps)};
    StateDist d = StateDist::initial();
    for (int n = 0; n <= max_steps; ++n) {
        if (n > 0) d = single_step(d, p);
        for (int i = 0; i <= max_index; ++i) {
            out.top[static_cast<size_t>(i)][n] = d.prob(StateId::top(i));
            out.bottom[static_cast<size_t>(i)][n] = d.prob(StateId::bottom(i));
        }
        out.extra_p[n] = d.prob(StateId::extra_p());
        out.extra_q[n] = d.prob(StateId::extra_q());
    }
    return out;
}

DoubleLayerSeries double_layer_series(int max_index, int max_double_steps, const WalkParams& p) {
    DoubleLayerSeries out{std::vector<PowerSeries>(static_cast<size_t>(max_index) + 1,
                                                   PowerSeries(max_double_steps)),
                          std::vector<PowerSeries>(static_cast<size_t>(max_index) + 1,
                                                   PowerSeries(max_double_steps)),
                          PowerSeries(max_double_steps)};
    DoubleStateDist d = DoubleStateDist::initial();
    for (int n = 0; n <= max_double_steps; ++n) {
        if (n > 0) d = double_step(d, p);
        for (int i = 0; i <= max_index; ++i) {
            out.upper[static_cast<size_t>(i)][n] = d.prob(DoubleStateId::upper(i));
            out.lower[static_cast<size_t>(i)][n] = d.prob(DoubleStateId::lower(i));
        }
        out.extra[n] = d.prob(DoubleStateId::extra());
    }
    return out;
}

}  // namespace knodel
