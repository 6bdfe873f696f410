#pragma once

// Certified integrals of c * t^a * |ln t|^b over subintervals of (0, inf),
// the integrand family every weight computation reduces to.
//
// Closed forms are used whenever they exist (b = 0 power rule, a = -1 via the
// |ln t| antiderivative); otherwise the integral is assembled from a series
// expansion next to t = 1 (where |ln t|^b may be singular) plus adaptive
// quadrature away from it, with exponential-tail truncation bounds at 0 and
// infinity.  Divergent integrals are reported as +inf values, decided by the
// exponent rule, never by quadrature blow-up.

#include <cmath>
#include <limits>
#include <stdexcept>

#include "rinorms/quadrature.hpp"

namespace rinorms {

// int_0 t^a |ln t|^b dt converges iff a > -1, or a = -1 with b < -1.
inline bool powlog_integrable_at_zero(double a, double b) {
    return a > -1.0 || (a == -1.0 && b < -1.0);
}

// int^inf t^a |ln t|^b dt converges iff a < -1, or a = -1 with b < -1.
inline bool powlog_integrable_at_inf(double a, double b) {
    return a < -1.0 || (a == -1.0 && b < -1.0);
}

namespace detail {

constexpr double kInf = std::numeric_limits<double>::infinity();

// int_{y1}^{y2} y^b e^{mu y} dy with 0 <= y1 < y2 <= inf.
// Requires b > -1 when y1 == 0 and mu < 0 when y2 == inf (checked by caller
// via the exponent rule).
inline IntegralResult int_pow_exp(double b, double mu, double y1, double y2,
                                  const QuadSpec& spec) {
    IntegralResult out{0.0, 0.0};
    int budget = spec.max_panels;

    // Series segment next to y = 0: sum_n mu^n (y^{n+b+1}) / (n! (n+b+1)),
    // truncated once |mu| delta / (n+1) <= 1/2 makes the tail geometric.
    double delta = 0.0;
    if (y1 < 1.0 && b != 0.0) {
        delta = std::min({y2, 1.0, mu != 0.0 ? 0.5 / std::abs(mu) : kInf});
        if (delta > y1) {
            auto series_at = [&](double y) {
                if (y == 0.0) return std::pair<double, double>{0.0, 0.0};
                double numer = std::pow(y, b + 1.0);  // mu^n y^{n+b+1} / n!
                double sum = 0.0;
                for (int n = 0;; ++n) {
                    sum += numer / (n + b + 1.0);
                    numer *= mu * y / (n + 1.0);
                    double next_mag = std::abs(numer / (n + b + 2.0));
                    if (next_mag < 1e-18 * std::max(1.0, std::abs(sum)) || n > 300)
                        return std::pair<double, double>{sum, 2.0 * next_mag};
                }
            };
            auto [s2, e2] = series_at(delta);
            auto [s1, e1] = series_at(y1);
            out.value += s2 - s1;
            out.error_bound += e1 + e2;
            y1 = delta;
            if (y1 >= y2) return out;
        }
    }

    // Tail truncation when y2 == inf (mu < 0).
    auto g = [b, mu](double y) { return std::pow(y, b) * std::exp(mu * y); };
    double Y = y2;
    double tail = 0.0;
    if (std::isinf(y2)) {
        double lambda = -mu;
        Y = std::max({2.0 * std::max(y1, 1.0), 2.0 * std::max(b, 0.0) / lambda + 1.0});
        tail = exp_poly_tail_bound(lambda, std::max(b, 0.0), Y);
        while (tail > spec.abs_tol) {
            Y *= 2.0;
            tail = exp_poly_tail_bound(lambda, std::max(b, 0.0), Y);
            if (Y > 1e300) throw quadrature_error("non-convergent quadrature");
        }
    }
    if (Y > y1) {
        IntegralResult mid = adapt(g, y1, Y, {}, spec, budget);
        out.value += mid.value;
        out.error_bound += mid.error_bound;
    }
    if (std::isinf(y2)) {
        double lambda = -mu;
        while (tail > 0.1 * spec.rel_tol * std::abs(out.value) && Y < 1e300 && budget > 0) {
            IntegralResult ext = adapt(g, Y, 2.0 * Y, {}, spec, budget);
            out.value += ext.value;
            out.error_bound += ext.error_bound;
            Y *= 2.0;
            tail = exp_poly_tail_bound(lambda, std::max(b, 0.0), Y);
        }
        out.error_bound += tail;
    }
    return out;
}

// One side of the split at t = 1.  side < 0 handles (lo, hi) in (0, 1],
// side > 0 handles [1, inf); in both cases y = |ln t| >= 0.
inline IntegralResult powlog_one_side(double c, double a, double b, double lo, double hi,
                                      int side, const QuadSpec& spec) {
    if (lo >= hi) return {0.0, 0.0};
    const bool at_zero = (side < 0) && lo == 0.0;
    const bool at_inf = (side > 0) && std::isinf(hi);
    if (at_zero && !powlog_integrable_at_zero(a, b)) return {kInf, 0.0};
    if (at_inf && !powlog_integrable_at_inf(a, b)) return {kInf, 0.0};

    if (b == 0.0) {
        if (a == -1.0) {
            if (at_zero || at_inf) return {kInf, 0.0};
            return {c * (std::log(hi) - std::log(lo)), 0.0};
        }
        double p = a + 1.0;
        double upper = at_inf ? 0.0 : std::pow(hi, p);
        double lower = at_zero ? 0.0 : std::pow(lo, p);
        return {c * (upper - lower) / p, 0.0};
    }

    // y = |ln t|, dt = -+ e^{-+y} dy; integrand becomes c y^b e^{mu y} with
    // mu = -(a+1) on (0,1] and mu = (a+1) on [1, inf).
    double y_near = (side < 0) ? (hi >= 1.0 ? 0.0 : std::log(1.0 / hi))
                               : (lo <= 1.0 ? 0.0 : std::log(lo));
    double y_far = (side < 0) ? (lo == 0.0 ? kInf : std::log(1.0 / lo))
                              : (std::isinf(hi) ? kInf : std::log(hi));
    double mu = (side < 0) ? -(a + 1.0) : (a + 1.0);

    if (a == -1.0) {
        // Exact: antiderivative of y^b.
        if (b == -1.0) {
            if (y_near == 0.0 || std::isinf(y_far)) return {kInf, 0.0};
            return {c * (std::log(y_far) - std::log(y_near)), 0.0};
        }
        double p = b + 1.0;
        if (y_near == 0.0 && p < 0.0) return {kInf, 0.0};
        if (std::isinf(y_far) && p > 0.0) return {kInf, 0.0};
        double upper = std::isinf(y_far) ? 0.0 : std::pow(y_far, p);
        double lower = (y_near == 0.0) ? 0.0 : std::pow(y_near, p);
        return {c * (upper - lower) / p, 0.0};
    }

    if (y_near == 0.0 && b <= -1.0) return {kInf, 0.0};
    IntegralResult r = int_pow_exp(b, mu, y_near, y_far, spec);
    return {c * r.value, std::abs(c) * r.error_bound};
}

}  // namespace detail

// int_lo^hi c t^a |ln t|^b dt with 0 <= lo < hi <= inf; +inf when divergent.
inline IntegralResult powlog_integral(double c, double a, double b, double lo, double hi,
                                      const QuadSpec& spec = {}) {
    if (!(lo >= 0.0) || !(hi > lo)) throw std::invalid_argument("powlog_integral: bad interval");
    if (c == 0.0) return {0.0, 0.0};
    IntegralResult total{0.0, 0.0};
    auto add = [&total](IntegralResult r) {
        if (r.divergent()) {
            total.value = detail::kInf;
            return;
        }
        total.value += r.value;
        total.error_bound += r.error_bound;
    };
    if (lo < 1.0) add(detail::powlog_one_side(c, a, b, lo, std::min(hi, 1.0), -1, spec));
    if (total.divergent()) return total;
    if (hi > 1.0) add(detail::powlog_one_side(c, a, b, std::max(lo, 1.0), hi, +1, spec));
    return total;
}

}  // namespace rinorms
