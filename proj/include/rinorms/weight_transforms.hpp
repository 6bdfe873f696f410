#pragma once

// Weight transforms that leave the closed power-log family: the down-dual
// weight of the averaging inequality, the smallest dominating weight for the
// star-to-double-star comparison, and its reflected form used on the
// transform side.  Results are pointwise-evaluable weights whose every
// evaluation is a certified integral.
//
// End behavior is known symbolically for power-log inputs (the exponent
// arithmetic below); envelope constants are fitted on the outer decades and
// doubled, then carried as certified-with-safety bounds for tail truncation.

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rinorms/eval_fn.hpp"
#include "rinorms/weight.hpp"

namespace rinorms {

// End behavior t^{power} * |ln t|^{log_power} (times a constant).
struct EndBehavior {
    double power = 0.0;
    double log_power = 0.0;
};

// A derived weight: pointwise evaluable, with validated envelopes and an
// exact in-family representation when one exists.
struct WeightFn {
    std::function<double(double)> eval;
    std::vector<double> kinks;
    EnvelopeAtZero env_zero;
    EnvelopeAtInf env_inf;
    EndBehavior at_zero, at_inf;
    std::optional<Weight> exact;

    double operator()(double t) const { return eval(t); }

    EvalFn as_eval() const {
        EvalFn out(eval);
        out.set_kinks(kinks);
        out.set_envelope_zero(env_zero);
        out.set_envelope_inf(env_inf);
        return out;
    }
};

namespace detail {

// Fit-validate envelope constants against the stated end behavior: sample the
// outer decades, take the max of value / shape, double it.
inline WeightFn finish_weight_fn(std::function<double(double)> eval, std::vector<double> kinks,
                                 EndBehavior z, EndBehavior i, std::optional<Weight> exact) {
    WeightFn w;
    w.eval = std::move(eval);
    w.kinks = std::move(kinks);
    w.at_zero = z;
    w.at_inf = i;
    w.exact = std::move(exact);

    double kz = 0.0;
    for (int j = 0; j < 24; ++j) {
        double t = std::pow(10.0, -4.0 - 6.0 * j / 23.0);
        double shape = std::pow(t, z.power) *
                       std::pow(std::max(1.0, std::log(1.0 / t)), z.log_power);
        kz = std::max(kz, w.eval(t) / shape);
    }
    w.env_zero = {2.0 * kz, -z.power, std::max(z.log_power, 0.0), 1e-4};

    double ki = 0.0;
    for (int j = 0; j < 24; ++j) {
        double t = std::pow(10.0, 4.0 + 6.0 * j / 23.0);
        double shape = std::pow(t, i.power) *
                       std::pow(std::max(1.0, std::log(t)), i.log_power);
        ki = std::max(ki, w.eval(t) / shape);
    }
    w.env_inf = {2.0 * ki, -i.power, std::max(i.log_power, 0.0), 1e4};
    return w;
}

}  // namespace detail

inline WeightFn to_weight_fn(const Weight& u) {
    WeightFn w;
    w.eval = [u](double t) { return u.eval(t); };
    w.kinks = u.kinks();
    const auto& f = u.first_piece();
    const auto& l = u.last_piece();
    w.at_zero = {f.a, f.b};
    w.at_inf = {l.a, l.b};
    w.env_zero = {f.c, -f.a, std::max(f.b, 0.0), std::min(f.hi, std::exp(-1.0))};
    w.env_inf = {l.c, -l.a, std::max(l.b, 0.0), std::max(l.lo, std::exp(1.0))};
    w.exact = u;
    return w;
}

// int_0^t w, certified via the envelope at the origin.
inline IntegralResult primitive(const WeightFn& w, double t, const QuadSpec& spec = {}) {
    if (w.exact) return primitive(*w.exact, t, spec);
    return integrate_from_zero(w.as_eval(), t, spec);
}

// int_x^inf w(y) y^{-r} dy, certified via the envelope at infinity.
inline IntegralResult tail_p(const WeightFn& w, double x, double r, const QuadSpec& spec = {}) {
    if (w.exact) return tail_p(*w.exact, x, r, spec);
    EvalFn g = w.as_eval();
    auto base = g;
    EvalFn shifted([base, r](double y) { return base(y) * std::pow(y, -r); });
    shifted.set_kinks(g.kinks());
    const auto& ei = *g.envelope_inf();
    shifted.set_envelope_inf({ei.coef, ei.decay + r, ei.log_pow, ei.from});
    return integrate(shifted, x, std::numeric_limits<double>::infinity(), spec);
}

// The down-dual weight of order q:
//   v'(t) = t^{q'+q-1} A(t) B(t) / [A(t) + t^q B(t)]^{q'+1},
// with A the primitive of v and B its q-tail.  Requires int v = inf.
inline WeightFn down_dual(const Weight& v, double q, const QuadSpec& spec = {}) {
    if (!(q > 1.0)) throw std::invalid_argument("down_dual: q > 1 required");
    if (!has_infinite_mass(v))
        throw std::domain_error("v' undefined: finite total mass");
    const auto& f = v.first_piece();
    if (f.c > 0.0 && !powlog_integrable_at_zero(f.a, f.b))
        throw std::domain_error("v' undefined: v not integrable at the origin");
    const double qp = q / (q - 1.0);

    auto eval = [v, q, qp, spec](double t) {
        double A = primitive(v, t, spec).value;
        double B = tail_p(v, t, q, spec).value;
        if (std::isinf(B)) return 0.0;  // t^q B dominates; the ratio degenerates to 0
        double denom = std::pow(A + std::pow(t, q) * B, qp + 1.0);
        return std::pow(t, qp + q - 1.0) * A * B / denom;
    };

    // Exponent arithmetic for the ends.  With v ~ c t^a L^b at an end:
    //   - when A and t^q B are comparable (the generic case), v' ~ t^{a(1-q')} L^{b(1-q')};
    //   - when B tends to a constant at 0 (a - q < -1 fails), v' ~ t^{a-q} L^b.
    const auto& l = v.last_piece();
    EndBehavior at_inf{l.a * (1.0 - qp), l.b * (1.0 - qp)};
    EndBehavior at_zero;
    if (f.c > 0.0 && !powlog_integrable_at_zero(f.a - q, f.b)) {
        at_zero = {f.a * (1.0 - qp), f.b * (1.0 - qp)};
    } else {
        at_zero = {f.a - q, f.b};
    }

    std::optional<Weight> exact;
    if (v.pieces().size() == 1 && f.b == 0.0 && f.a > -1.0 && f.a < q - 1.0) {
        // Pure power: with A = c A1 t^{a+1} and B = c B1 t^{a-q+1},
        // v' = c^2 A1 B1 / (c (A1 + B1))^{q'+1} * t^{a(1-q')}.
        double A1 = 1.0 / (f.a + 1.0), B1 = 1.0 / (q - f.a - 1.0);
        double coef = (f.c * A1) * (f.c * B1) / std::pow(f.c * (A1 + B1), qp + 1.0);
        exact = Weight::power(coef, f.a * (1.0 - qp));
    }

    return detail::finish_weight_fn(eval, v.kinks(), at_zero, at_inf, exact);
}

// u^{(p)}(t) = p t^{p-1} int_t^inf u(s) s^{-p} ds; the smallest weight w with
// the double-star norm of every f dominated by the star norm against w.
inline WeightFn level_smallest(const Weight& u, double p, const QuadSpec& spec = {}) {
    if (!(p > 1.0)) throw std::invalid_argument("level_smallest: p > 1 required");
    const auto& l = u.last_piece();
    if (l.c > 0.0 && !powlog_integrable_at_inf(l.a - p, l.b))
        throw std::domain_error("u^(p) undefined: divergent tail integral");
    auto eval = [u, p, spec](double t) {
        return p * std::pow(t, p - 1.0) * tail_p(u, t, p, spec).value;
    };
    const auto& f = u.first_piece();
    EndBehavior at_inf{l.a, l.b};
    EndBehavior at_zero = (f.c > 0.0 && !powlog_integrable_at_zero(f.a - p, f.b))
                              ? EndBehavior{f.a, f.b}
                              : EndBehavior{p - 1.0, 0.0};
    std::optional<Weight> exact;
    if (u.pieces().size() == 1 && f.b == 0.0 && f.a < p - 1.0)
        exact = Weight::power(p * f.c / (p - f.a - 1.0), f.a);
    return detail::finish_weight_fn(eval, u.kinks(), at_zero, at_inf, exact);
}

// u^{(p)}_{2p}(t) = p t^{p-1} int_{1/t}^inf u(s) s^{-p} ds; equals the
// reflected composition u^{(p)}(1/t) t^{2p-2}.
inline WeightFn fourier_target(const Weight& u, double p, const QuadSpec& spec = {}) {
    if (!(p > 1.0)) throw std::invalid_argument("fourier_target: p > 1 required");
    const auto& l = u.last_piece();
    if (l.c > 0.0 && !powlog_integrable_at_inf(l.a - p, l.b))
        throw std::domain_error("u^(p)_2p undefined: divergent tail integral");
    auto eval = [u, p, spec](double t) {
        return p * std::pow(t, p - 1.0) * tail_p(u, 1.0 / t, p, spec).value;
    };
    const auto& f = u.first_piece();
    EndBehavior at_zero{2.0 * p - 2.0 - l.a, l.b};
    EndBehavior at_inf = (f.c > 0.0 && !powlog_integrable_at_zero(f.a - p, f.b))
                             ? EndBehavior{2.0 * p - 2.0 - f.a, f.b}
                             : EndBehavior{p - 1.0, 0.0};
    std::vector<double> kinks;
    for (double k : u.kinks()) kinks.push_back(1.0 / k);
    std::optional<Weight> exact;
    if (u.pieces().size() == 1 && f.b == 0.0 && f.a < p - 1.0)
        exact = Weight::power(p * f.c / (p - f.a - 1.0), 2.0 * p - 2.0 - f.a);
    return detail::finish_weight_fn(eval, std::move(kinks), at_zero, at_inf, exact);
}

}  // namespace rinorms
