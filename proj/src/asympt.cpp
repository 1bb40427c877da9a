#include "knodel/asympt.hpp"

#include <cmath>

#include "knodel/v_subst.hpp"
#include "knodel/walk_graph.hpp"

namespace knodel {

PowerSeries expected_end_exact(int order, const WalkParams& p) {
    const PowerSeries transferred = transfer_series(closed_forms(p).expected_end, order, p);
    const PowerSeries dp = expected_end_series(order, p);
    if (transferred != dp)
        throw std::logic_error("expected_end_exact: transfer disagrees with chain evolution");
    return transferred;
}

PowerSeries expected_end_half_closed(int order) {
    const Rational one(1);
    PowerSeries one_minus_z = PowerSeries::constant(one, order);
    PowerSeries z_minus_one = PowerSeries::constant(-one, order);
    PowerSeries one_plus_z = PowerSeries::constant(one, order);
    if (order >= 1) {
        one_minus_z[1] = -one;
        z_minus_one[1] = one;
        one_plus_z[1] = one;
    }
    const PowerSeries numer = z_minus_one + one_plus_z * sqrt(one_minus_z);
    return numer / (Rational(2) * one_minus_z * one_minus_z);
}

Rational reference_coefficient(int n) {
    if (n < 0) throw std::invalid_argument("reference_coefficient: negative index");
    Rational c(1);
    for (int k = 1; k <= n; ++k) c *= Rational(2 * k + 1, 2 * k);
    return c;
}

AsymptoticEstimate asymptotic_estimate(long n, const WalkParams& p, bool with_exact) {
    if (n < 1) throw std::invalid_argument("asymptotic_estimate: n must be >= 1");
    const double ab = (p.alpha * p.beta).to_double();
    AsymptoticEstimate e;
    e.n = n;
    e.estimate = 4.0 * std::sqrt(ab) * std::sqrt(static_cast<double>(n) / M_PI);
    if (with_exact) {
        // exact rationals stay affordable only for small n
        if (n > 256) throw std::invalid_argument("asymptotic_estimate: exact value only for n <= 256");
        e.exact = expected_end_exact(static_cast<int>(n), p)[static_cast<int>(n)];
    }
    return e;
}

std::vector<double> expected_end_float(int max_double_steps, const WalkParams& p) {
    if (max_double_steps < 0) throw std::invalid_argument("expected_end_float: negative steps");
    const double a = p.alpha.to_double();
    const double b = p.beta.to_double();
    const double ab = a * b;
    const double stay = 1.0 - 2.0 * ab;
    const size_t n = static_cast<size_t>(max_double_steps);
    std::vector<double> f(n + 2, 0.0), g(n + 2, 0.0), nf(n + 2, 0.0), ng(n + 2, 0.0);
    double q = 0.0;
    f[0] = 1.0;
    std::vector<double> out(n + 1, 0.0);
    for (size_t m = 1; m <= n; ++m) {
        std::fill(nf.begin(), nf.end(), 0.0);
        std::fill(ng.begin(), ng.end(), 0.0);
        double nq = 0.0;
        for (size_t k = 0; k < m + 1 && k < n + 1; ++k) {
            if (f[k] != 0.0) {
                nf[k] += stay * f[k];
                nf[k + 1] += ab * f[k];
                if (k == 0)
                    ng[0] += ab * f[k];
                else
                    nf[k - 1] += ab * f[k];
            }
            if (g[k] != 0.0) {
                ng[k] += stay * g[k];
                ng[k + 1] += ab * g[k];
                if (k == 0)
                    nq += ab * g[k];
                else
                    ng[k - 1] += ab * g[k];
            }
        }
        nq += a * a * q;
        nf[0] += ab * q;
        nf[1] += b * b * q;
        ng[0] += ab * q;
        f.swap(nf);
        g.swap(ng);
        q = nq;
        double e = 0.0;
        for (size_t k = 0; k <= m && k < n + 1; ++k)
            e += 2.0 * static_cast<double>(k) * f[k] + (2.0 * static_cast<double>(k) + 1.0) * g[k];
        out[m] = e;
    }
    return out;
}

}  // namespace knodel
