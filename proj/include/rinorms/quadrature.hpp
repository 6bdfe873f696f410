#pragma once

// Adaptive quadrature over subintervals of (0, inf).
//
// Every integral is computed after the substitution t = e^x, so integrands of
// power-log type become exponentially decaying and smooth in x.  Panels are
// refined by interval halving; each panel carries the two-level Gauss(7) /
// Kronrod(15) estimate and its difference as the error bound.  Known kink
// locations are panel boundaries from the start, so the embedded rule never
// straddles (or evaluates) a point of non-smoothness.
//
// Unbounded endpoints are truncated only against certified envelope bounds:
// the tail beyond the truncation point is bounded in closed form and folded
// into the reported error.  Missing envelopes are an error, never a silent
// truncation.

#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "rinorms/eval_fn.hpp"
#include "rinorms/step_fn.hpp"

namespace rinorms {

struct QuadSpec {
    double rel_tol = 1e-9;
    double abs_tol = 1e-14;
    int max_panels = 20000;
};

struct IntegralResult {
    double value = 0.0;
    double error_bound = 0.0;

    bool divergent() const { return std::isinf(value); }
};

struct quadrature_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// Kronrod-15 abscissae on [0,1] (symmetric) with Kronrod weights and the
// embedded Gauss-7 weights (zero where the node is Kronrod-only).
inline constexpr double kGkNode[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
inline constexpr double kGkWK[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr double kGkWG[8] = {
    0.0, 0.129484966168870, 0.0, 0.279705391489277,
    0.0, 0.381830050505119, 0.0, 0.417959183673469};

struct Panel {
    double a, b;
    double value;
    double err;
    bool operator<(const Panel& o) const { return err < o.err; }
};

template <class F>
Panel gk15(const F& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double k15 = 0.0, g7 = 0.0;
    for (int i = 0; i < 8; ++i) {
        double fv;
        if (i == 7) {
            fv = f(mid);
        } else {
            fv = f(mid - half * kGkNode[i]) + f(mid + half * kGkNode[i]);
        }
        if (!std::isfinite(fv))
            throw quadrature_error("non-finite integrand value");
        k15 += kGkWK[i] * fv;
        g7 += kGkWG[i] * fv;
    }
    k15 *= half;
    g7 *= half;
    return {a, b, k15, std::abs(k15 - g7)};
}

// Adaptive refinement of sum over [a, b] split at the given interior points.
// `budget` counts panels across a whole integrate() call.
template <class F>
IntegralResult adapt(const F& f, double a, double b, const std::vector<double>& splits,
                     const QuadSpec& spec, int& budget) {
    if (!(b > a)) return {0.0, 0.0};
    constexpr double kMaxPanelWidth = 1.5;
    std::vector<double> edges{a};
    for (double s : splits)
        if (s > a && s < b) edges.push_back(s);
    edges.push_back(b);

    std::priority_queue<Panel> heap;
    double total = 0.0, toterr = 0.0;
    auto push = [&](double lo, double hi) {
        int chunks = std::max(1, static_cast<int>(std::ceil((hi - lo) / kMaxPanelWidth)));
        for (int c = 0; c < chunks; ++c) {
            double pa = lo + (hi - lo) * c / chunks;
            double pb = lo + (hi - lo) * (c + 1) / chunks;
            Panel p = gk15(f, pa, pb);
            total += p.value;
            toterr += p.err;
            heap.push(p);
            --budget;
        }
    };
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) push(edges[i], edges[i + 1]);

    while (toterr > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
        if (budget <= 0) throw quadrature_error("non-convergent quadrature");
        Panel worst = heap.top();
        heap.pop();
        total -= worst.value;
        toterr -= worst.err;
        double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // Panel is at floating-point resolution; keep its estimate.
            total += worst.value;
            toterr += worst.err;
            break;
        }
        push(worst.a, mid);
        push(mid, worst.b);
    }
    return {total, toterr};
}

// Certified upper bound for int_X^inf e^{-lambda x} x^e dx (lambda > 0,
// e >= 0).  Valid once lambda*X >= 2e; returns +inf otherwise so the caller
// keeps enlarging X.
inline double exp_poly_tail_bound(double lambda, double e, double X) {
    if (!(lambda > 0.0)) return std::numeric_limits<double>::infinity();
    if (X <= 0.0 || lambda * X < 2.0 * e) return std::numeric_limits<double>::infinity();
    return std::pow(X, e) * std::exp(-lambda * X) / (lambda - e / X);
}

// Tail of the envelope beyond t = T (T >= max(from, e)).
inline double envelope_tail_integral(const EnvelopeAtInf& env, double T) {
    if (env.coef == 0.0) return 0.0;
    if (!(env.decay > 1.0)) return std::numeric_limits<double>::infinity();
    return env.coef * exp_poly_tail_bound(env.decay - 1.0, env.log_pow, std::log(T));
}

// Head of the envelope below t = eps (eps <= min(upto, 1/e)).
inline double envelope_head_integral(const EnvelopeAtZero& env, double eps) {
    if (env.coef == 0.0) return 0.0;
    if (!(env.growth < 1.0)) return std::numeric_limits<double>::infinity();
    return env.coef * exp_poly_tail_bound(1.0 - env.growth, env.log_pow, std::log(1.0 / eps));
}

}  // namespace detail

// Exact integral of a StepFn over (a, b); b may be +inf.
inline IntegralResult integrate(const StepFn& f, double a, double b, const QuadSpec& = {}) {
    if (!(a >= 0.0) || !(b > a)) throw std::invalid_argument("integrate: need 0 <= a < b");
    if (std::isinf(b)) {
        if (!f.vanishes_at_infinity()) return {std::numeric_limits<double>::infinity(), 0.0};
        b = std::max(a + 1.0, f.support_end());
    }
    return {f.integral_to(b) - f.integral_to(a), 0.0};
}

// Quadrature of an EvalFn over (a, b), 0 < a < b <= inf.  An infinite upper
// limit requires an integrable envelope at infinity.
inline IntegralResult integrate(const EvalFn& f, double a, double b, const QuadSpec& spec = {}) {
    if (!(a > 0.0) || !(b > a)) throw std::invalid_argument("integrate: need 0 < a < b");
    int budget = spec.max_panels;
    std::vector<double> splits;
    for (double k : f.kinks()) splits.push_back(std::log(k));

    auto g = [&f](double x) {
        double t = std::exp(x);
        return f(t) * t;
    };

    if (!std::isinf(b)) {
        return detail::adapt(g, std::log(a), std::log(b), splits, spec, budget);
    }

    if (!f.envelope_inf())
        throw std::invalid_argument("integrate: infinite upper limit requires a decay envelope");
    const auto& env = *f.envelope_inf();
    if (env.coef > 0.0 && !(env.decay > 1.0))
        return {std::numeric_limits<double>::infinity(), 0.0};

    double T = std::max({a * 2.0, env.from, std::exp(1.0)});
    double tail = detail::envelope_tail_integral(env, T);
    while (tail > spec.abs_tol) {
        T *= 2.0;
        tail = detail::envelope_tail_integral(env, T);
        if (T > 1e300) throw quadrature_error("non-convergent quadrature");
    }
    IntegralResult main = detail::adapt(g, std::log(a), std::log(T), splits, spec, budget);
    // The absolute truncation target can dominate small integrals; keep
    // extending until the tail is also small relative to the value.
    while (tail > 0.1 * spec.rel_tol * std::abs(main.value) && T < 1e300 && budget > 0) {
        IntegralResult ext = detail::adapt(g, std::log(T), std::log(4.0 * T), splits, spec, budget);
        main.value += ext.value;
        main.error_bound += ext.error_bound;
        T *= 4.0;
        tail = detail::envelope_tail_integral(env, T);
    }
    return {main.value, main.error_bound + tail};
}

// Quadrature of an EvalFn over (0, b); needs an integrable envelope at zero.
inline IntegralResult integrate_from_zero(const EvalFn& f, double b, const QuadSpec& spec = {}) {
    if (!(b > 0.0)) throw std::invalid_argument("integrate_from_zero: need b > 0");
    if (!f.envelope_zero())
        throw std::invalid_argument("integrate_from_zero: requires an envelope at the origin");
    const auto& env = *f.envelope_zero();
    if (env.coef > 0.0 && !(env.growth < 1.0))
        return {std::numeric_limits<double>::infinity(), 0.0};

    double eps = std::min({b * 0.5, env.upto, std::exp(-1.0)});
    double head = detail::envelope_head_integral(env, eps);
    while (head > spec.abs_tol) {
        eps *= 0.5;
        head = detail::envelope_head_integral(env, eps);
        if (eps < 1e-300) throw quadrature_error("non-convergent quadrature");
    }
    IntegralResult rest = integrate(f, eps, b, spec);
    // As with the tail: shrink further when the head bound is not small
    // relative to the value itself.
    int budget = spec.max_panels;
    while (head > 0.1 * spec.rel_tol * std::abs(rest.value) && eps > 1e-300 && budget > 0) {
        double eps2 = eps / 16.0;
        auto g = [&f](double x) {
            double t = std::exp(x);
            return f(t) * t;
        };
        IntegralResult ext = detail::adapt(g, std::log(eps2), std::log(eps), {}, spec, budget);
        rest.value += ext.value;
        rest.error_bound += ext.error_bound;
        eps = eps2;
        head = detail::envelope_head_integral(env, eps);
    }
    return {rest.value, rest.error_bound + head};
}

// Full-line integral over (0, inf).
inline IntegralResult integrate_all(const EvalFn& f, const QuadSpec& spec = {}) {
    if (!f.envelope_inf())
        throw std::invalid_argument("integrate_all: requires a decay envelope");
    const auto& env = *f.envelope_inf();
    if (env.coef > 0.0 && !(env.decay > 1.0))
        return {std::numeric_limits<double>::infinity(), 0.0};
    double T = std::max({2.0, env.from, std::exp(1.0)});
    double tail = detail::envelope_tail_integral(env, T);
    while (tail > spec.abs_tol) {
        T *= 2.0;
        tail = detail::envelope_tail_integral(env, T);
        if (T > 1e300) throw quadrature_error("non-convergent quadrature");
    }
    IntegralResult head = integrate_from_zero(f, T, spec);
    return {head.value, head.error_bound + tail};
}

}  // namespace rinorms
