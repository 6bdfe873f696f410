#pragma once

// The averaging operator P, its formal dual Q, the window operator U and the
// running average f -> f**.
//
// On StepFn inputs all four are evaluated by exact piecewise antiderivatives
// (linear for P and U, logarithmic for Q); quadrature enters only for EvalFn
// inputs, i.e. for compositions like P(Qf).  Every constructed EvalFn carries
// certified envelopes at both ends so further integration stays certified.

#include <cmath>
#include <stdexcept>

#include "rinorms/eval_fn.hpp"
#include "rinorms/quadrature.hpp"
#include "rinorms/step_fn.hpp"

namespace rinorms {

// (Pf)(t) = t^{-1} int_0^t f, exact.
inline EvalFn hardy_P(const StepFn& f) {
    EvalFn out([f](double t) { return f.integral_to(t) / t; },
               is_nonincreasing(f) ? Monotone::decreasing : Monotone::none);
    out.set_kinks(f.breakpoints());
    out.set_envelope_zero({f.max_value(), 0.0, 0.0, 1.0});
    if (f.vanishes_at_infinity())
        out.set_envelope_inf({f.integral(), 1.0, 0.0, std::max(1.0, f.support_end())});
    else
        out.set_envelope_inf({f.max_value(), 0.0, 0.0, 1.0});
    return out;
}

// (Qf)(t) = int_t^inf f(s) ds/s, exact via logarithmic antiderivatives.
inline EvalFn hardy_Q(const StepFn& f) {
    if (!f.vanishes_at_infinity())
        throw std::domain_error("Q undefined: non-integrable tail");
    const auto bps = f.breakpoints();
    const auto vals = f.values();
    const std::size_t k = bps.size();
    // suffix[j] = int_{b_j}^inf f(s) ds/s for j = 0..k (b_0 read as the start
    // of piece j); suffix over whole pieces only.
    std::vector<double> suffix(k + 1, 0.0);
    for (std::size_t j = k; j-- > 1;)
        suffix[j] = suffix[j + 1] + vals[j] * (std::log(bps[j]) - std::log(bps[j - 1]));
    auto q_eval = [bps, vals, suffix](double t) {
        auto it = std::upper_bound(bps.begin(), bps.end(), t);
        std::size_t j = static_cast<std::size_t>(it - bps.begin());
        if (j >= bps.size()) return 0.0;  // beyond the support
        return vals[j] * (std::log(bps[j]) - std::log(t)) + suffix[j + 1];
    };
    EvalFn out(q_eval, Monotone::decreasing);
    out.set_kinks(bps);
    double t0 = std::min(k ? bps[0] : 1.0, std::exp(-1.0));
    out.set_envelope_zero({q_eval(t0) + vals[0], 0.0, 1.0, t0});
    out.set_envelope_inf({0.0, 0.0, 0.0, std::max(1.0, f.support_end())});
    return out;
}

// (U f*)(t) = int_0^{1/t} f*, exact; rearranges the input internally.
inline EvalFn op_U(const StepFn& f) {
    StepFn r = rearrange(f);
    EvalFn out([r](double t) { return r.integral_to(1.0 / t); }, Monotone::decreasing);
    std::vector<double> kk;
    for (double b : r.breakpoints()) kk.push_back(1.0 / b);
    out.set_kinks(std::move(kk));
    out.set_envelope_zero({r.integral(), 0.0, 0.0, 1.0});
    out.set_envelope_inf({r.max_value(), 1.0, 0.0, 1.0});
    return out;
}

// f**(t) = t^{-1} int_0^t f*, exact.
inline EvalFn double_star(const StepFn& f) {
    StepFn r = rearrange(f);
    EvalFn out([r](double t) { return r.integral_to(t) / t; }, Monotone::decreasing);
    out.set_kinks(r.breakpoints());
    out.set_envelope_zero({r.max_value(), 0.0, 0.0, 1.0});
    out.set_envelope_inf({r.integral(), 1.0, 0.0, std::max(1.0, r.support_end())});
    return out;
}

// P on an evaluable function; each evaluation is a certified quadrature.
inline EvalFn hardy_P(const EvalFn& f, const QuadSpec& spec = {}) {
    if (!f.envelope_zero() ||
        (f.envelope_zero()->coef > 0.0 && !(f.envelope_zero()->growth < 1.0)))
        throw std::domain_error("P undefined: non-integrable at origin");
    EvalFn out([f, spec](double t) { return integrate_from_zero(f, t, spec).value / t; },
               f.monotone() == Monotone::decreasing ? Monotone::decreasing : Monotone::none);
    out.set_kinks(f.kinks());

    const auto& z = *f.envelope_zero();
    double zu = std::min({z.upto, std::exp(-1.0),
                          z.log_pow > 0.0 ? std::exp(-2.0 * z.log_pow / (1.0 - z.growth)) : 1.0});
    out.set_envelope_zero({2.0 * z.coef / (1.0 - z.growth), z.growth, z.log_pow, zu});

    if (f.envelope_inf()) {
        const auto& e = *f.envelope_inf();
        if (e.coef == 0.0 || e.decay > 1.0) {
            IntegralResult tot = integrate_all(f, spec);
            out.set_envelope_inf({tot.value + tot.error_bound, 1.0, 0.0,
                                  std::max(1.0, e.from)});
        } else if (e.decay < 1.0) {
            double head = integrate_from_zero(f, e.from, spec).value;
            out.set_envelope_inf({head + e.coef / (1.0 - e.decay), e.decay, e.log_pow,
                                  std::max(e.from, std::exp(1.0))});
        } else {
            double head = integrate_from_zero(f, e.from, spec).value;
            out.set_envelope_inf({head + e.coef / (e.log_pow + 1.0), 1.0, e.log_pow + 1.0,
                                  std::max(e.from, std::exp(1.0))});
        }
    }
    return out;
}

// Q on an evaluable function.
inline EvalFn hardy_Q(const EvalFn& f, const QuadSpec& spec = {}) {
    if (!f.envelope_inf() ||
        (f.envelope_inf()->coef > 0.0 && !(f.envelope_inf()->decay > 0.0)))
        throw std::domain_error("Q undefined: non-integrable tail");
    const auto& e = *f.envelope_inf();
    EvalFn integrand = [&] {
        auto base = f;
        EvalFn g([base](double s) { return base(s) / s; });
        g.set_envelope_inf({e.coef, e.decay + 1.0, e.log_pow, e.from});
        g.set_kinks(f.kinks());
        return g;
    }();
    EvalFn out([integrand, spec](double t) {
                   return integrate(integrand, t, std::numeric_limits<double>::infinity(), spec).value;
               },
               Monotone::decreasing);
    out.set_kinks(f.kinks());

    if (e.coef == 0.0) {
        out.set_envelope_inf({0.0, 0.0, 0.0, e.from});
    } else {
        double from = std::max({e.from, std::exp(1.0),
                                e.log_pow > 0.0 ? std::exp(2.0 * e.log_pow / e.decay) : 1.0});
        out.set_envelope_inf({2.0 * e.coef / e.decay, e.decay, e.log_pow, from});
    }
    if (f.envelope_zero()) {
        const auto& z = *f.envelope_zero();
        double u = std::min(z.upto, std::exp(-1.0));
        double at_u = out(u);
        if (z.growth > 0.0)
            out.set_envelope_zero({at_u + z.coef / z.growth, z.growth, z.log_pow, u});
        else
            out.set_envelope_zero({at_u + z.coef / (z.log_pow + 1.0), 0.0, z.log_pow + 1.0, u});
    }
    return out;
}

}  // namespace rinorms
