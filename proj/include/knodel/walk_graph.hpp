#pragma once

#include <string>
#include <utility>
#include <vector>

#include "knodel/power_series.hpp"
#include "knodel/walk_params.hpp"

namespace knodel {

/// A distribution was handed to a step relation that expects the other
/// parity class.
struct ParityViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// State of the single-step walk graph: two half-line layers plus one
/// extra state hanging off each layer's origin.
struct StateId {
    enum class Kind { Top, Bottom, ExtraP, ExtraQ };
    Kind kind = Kind::Top;
    int index = 0;

    static StateId top(int i) { return {Kind::Top, i}; }
    static StateId bottom(int i) { return {Kind::Bottom, i}; }
    static StateId extra_p() { return {Kind::ExtraP, 0}; }
    static StateId extra_q() { return {Kind::ExtraQ, 0}; }

    friend bool operator==(const StateId&, const StateId&) = default;
    std::string str() const;
};

/// State of the double-step walk graph. Upper(N) sits over single-step
/// state 2N, Lower(N) over 2N+1, Extra over the lower extra state.
struct DoubleStateId {
    enum class Kind { Upper, Lower, Extra };
    Kind kind = Kind::Upper;
    int index = 0;

    static DoubleStateId upper(int n) { return {Kind::Upper, n}; }
    static DoubleStateId lower(int n) { return {Kind::Lower, n}; }
    static DoubleStateId extra() { return {Kind::Extra, 0}; }

    StateId to_single() const;
    friend bool operator==(const DoubleStateId&, const DoubleStateId&) = default;
    std::string str() const;
};

/// Exact finite-support distribution over single-step states after a
/// given number of steps. Probabilities are exact rationals summing to 1.
class StateDist {
public:
    /// Unit mass at Top(0), step 0.
    static StateDist initial();
    /// Builds from explicit support; validates nonnegativity, total mass 1
    /// and the support bound index <= step.
    static StateDist from_support(int step, const std::vector<std::pair<StateId, Rational>>& mass);

    int step() const { return step_; }
    /// Largest layer index with storage (mass beyond is zero).
    int max_index() const { return static_cast<int>(top_.size()) - 1; }
    Rational prob(const StateId& s) const;
    Rational total_mass() const;

    friend StateDist single_step(const StateDist& d, const WalkParams& p);
    friend StateDist odd_from_even(const StateDist& d, const WalkParams& p);

private:
    StateDist() = default;
    std::vector<Rational> top_, bottom_;
    Rational extra_p_, extra_q_;
    int step_ = 0;
};

/// Same idea over the double-step graph; the step counter counts
/// double-steps.
class DoubleStateDist {
public:
    static DoubleStateDist initial();

    int step() const { return step_; }
    int max_index() const { return static_cast<int>(upper_.size()) - 1; }
    Rational prob(const DoubleStateId& s) const;
    Rational total_mass() const;
    /// Expected state index; Upper(k) carries index 2k, Lower(k) carries
    /// 2k+1, the extra state carries 0.
    Rational expected_index() const;

    friend DoubleStateDist double_step(const DoubleStateDist& d, const WalkParams& p);

private:
    DoubleStateDist() = default;
    std::vector<Rational> upper_, lower_;
    Rational extra_;
    int step_ = 0;
};

/// One transition of the single-step chain.
StateDist single_step(const StateDist& d, const WalkParams& p);

/// One transition of the double-step chain.
DoubleStateDist double_step(const DoubleStateDist& d, const WalkParams& p);

/// Exact decomposition check: the distribution after m double-steps must
/// equal the one after 2m single steps under the state identification.
bool matches_single(const DoubleStateDist& dd, const StateDist& sd);

/// Exact equality of step counters and every state probability.
bool same_distribution(const StateDist& a, const StateDist& b);

/// Series whose n-th coefficient is the probability of occupying target
/// after n single steps from Top(0).
PowerSeries state_series(const StateId& target, int max_steps, const WalkParams& p);

/// Double-step analogue, starting from Upper(0).
PowerSeries double_state_series(const DoubleStateId& target, int max_double_steps,
                                const WalkParams& p);

/// m-th coefficient = expected state index after m double-steps.
PowerSeries expected_end_series(int max_double_steps, const WalkParams& p);

/// All single-step state series up to max_index in one sweep.
struct SingleLayerSeries {
    std::vector<PowerSeries> top, bottom;  // index 0..max_index
    PowerSeries extra_p, extra_q;
};
SingleLayerSeries single_layer_series(int max_index, int max_steps, const WalkParams& p);

/// All double-step state series up to max_index in one sweep.
struct DoubleLayerSeries {
    std::vector<PowerSeries> upper, lower;
    PowerSeries extra;
};
DoubleLayerSeries double_layer_series(int max_index, int max_double_steps, const WalkParams& p);

}  // namespace knodel
