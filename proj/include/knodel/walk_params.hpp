#pragma once

#include "knodel/rational.hpp"

namespace knodel {

/// The step-probability pair: alpha for up-steps, beta = 1 - alpha for
/// down-steps (roles swap after every single step). Degenerate alpha in
/// {0, 1} is rejected: every closed form divides by alpha*beta.
struct WalkParams {
    Rational alpha;
    Rational beta;

    explicit WalkParams(const Rational& a) : alpha(a), beta(Rational(1) - a) {
        if (a.sign() <= 0 || a >= Rational(1))
            throw std::domain_error("WalkParams: alpha must lie strictly between 0 and 1");
    }

    static WalkParams parse(const std::string& text) { return WalkParams(Rational::parse(text)); }
};

}  // namespace knodel
