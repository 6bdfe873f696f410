#pragma once

// Pointwise-evaluable functions on (0, inf) with the metadata the quadrature
// engine needs: a monotonicity flag, optional certified envelopes at both
// ends of the half-line, and a list of known kink locations (points where
// the function is continuous but not smooth, used to pre-split panels).
//
// Envelope conventions (both are *upper bounds*, required valid on their
// stated range):
//   at infinity:  f(t) <= coef * t^{-decay} * max(1, ln t)^{log_pow},  t >= from
//   at zero:      f(t) <= coef * t^{-growth} * max(1, ln(1/t))^{log_pow},  t <= upto
// Integrable tails need decay > 1; integrable origins need growth < 1.

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rinorms/step_fn.hpp"

namespace rinorms {

enum class Monotone { none, decreasing, increasing };

struct EnvelopeAtInf {
    double coef = 0.0;
    double decay = 0.0;
    double log_pow = 0.0;
    double from = 1.0;

    double bound(double t) const {
        double lg = std::max(1.0, std::log(t));
        return coef * std::pow(t, -decay) * std::pow(lg, log_pow);
    }
};

struct EnvelopeAtZero {
    double coef = 0.0;
    double growth = 0.0;
    double log_pow = 0.0;
    double upto = 1.0;

    double bound(double t) const {
        double lg = std::max(1.0, std::log(1.0 / t));
        return coef * std::pow(t, -growth) * std::pow(lg, log_pow);
    }
};

class EvalFn {
public:
    EvalFn() = default;
    explicit EvalFn(std::function<double(double)> f, Monotone m = Monotone::none)
        : f_(std::move(f)), monotone_(m) {}

    double operator()(double t) const {
        if (!f_) throw std::logic_error("EvalFn: empty");
        return f_(t);
    }

    Monotone monotone() const { return monotone_; }
    const std::optional<EnvelopeAtInf>& envelope_inf() const { return env_inf_; }
    const std::optional<EnvelopeAtZero>& envelope_zero() const { return env_zero_; }
    const std::vector<double>& kinks() const { return kinks_; }

    EvalFn& set_monotone(Monotone m) { monotone_ = m; return *this; }
    EvalFn& set_envelope_inf(EnvelopeAtInf e) { env_inf_ = e; return *this; }
    EvalFn& set_envelope_zero(EnvelopeAtZero e) { env_zero_ = e; return *this; }
    EvalFn& set_kinks(std::vector<double> k) {
        std::sort(k.begin(), k.end());
        k.erase(std::unique(k.begin(), k.end()), k.end());
        kinks_ = std::move(k);
        return *this;
    }

    // f^p pointwise, p > 0.  Monotonicity is preserved; envelopes transform
    // by raising coef and multiplying the exponents.
    EvalFn powed(double p) const {
        auto base = f_;
        EvalFn out([base, p](double t) { return std::pow(base(t), p); }, monotone_);
        if (env_inf_)
            out.set_envelope_inf({std::pow(env_inf_->coef, p), env_inf_->decay * p,
                                  env_inf_->log_pow * p, env_inf_->from});
        if (env_zero_)
            out.set_envelope_zero({std::pow(env_zero_->coef, p), env_zero_->growth * p,
                                   env_zero_->log_pow * p, env_zero_->upto});
        out.set_kinks(kinks_);
        return out;
    }

    EvalFn scaled(double c) const {
        if (!(c >= 0.0)) throw std::invalid_argument("EvalFn::scaled: negative factor");
        auto base = f_;
        EvalFn out([base, c](double t) { return c * base(t); }, monotone_);
        if (env_inf_) out.set_envelope_inf({c * env_inf_->coef, env_inf_->decay, env_inf_->log_pow, env_inf_->from});
        if (env_zero_) out.set_envelope_zero({c * env_zero_->coef, env_zero_->growth, env_zero_->log_pow, env_zero_->upto});
        out.set_kinks(kinks_);
        return out;
    }

private:
    std::function<double(double)> f_;
    Monotone monotone_ = Monotone::none;
    std::optional<EnvelopeAtInf> env_inf_;
    std::optional<EnvelopeAtZero> env_zero_;
    std::vector<double> kinks_;
};

// A StepFn viewed as an EvalFn.  Support is finite when the tail vanishes,
// which the envelope records exactly.
inline EvalFn to_eval(const StepFn& f) {
    EvalFn out([f](double t) { return f.value_at(t); },
               is_nonincreasing(f) ? Monotone::decreasing : Monotone::none);
    out.set_kinks(f.breakpoints());
    out.set_envelope_zero({f.max_value(), 0.0, 0.0, 1.0});
    if (f.vanishes_at_infinity()) {
        double end = f.support_end();
        out.set_envelope_inf({0.0, 0.0, 0.0, std::max(end, 1.0)});
    }
    return out;
}

// h(t) = 1/(1+t); the reference element used by the finiteness hypotheses.
inline EvalFn one_over_one_plus_t() {
    EvalFn out([](double t) { return 1.0 / (1.0 + t); }, Monotone::decreasing);
    out.set_envelope_inf({1.0, 1.0, 0.0, 1.0});
    out.set_envelope_zero({1.0, 0.0, 0.0, 1.0});
    return out;
}

inline EvalFn product(const EvalFn& f, const EvalFn& g) {
    auto fe = f, ge = g;
    EvalFn out([fe, ge](double t) { return fe(t) * ge(t); });
    if (f.envelope_inf() && g.envelope_inf()) {
        const auto &a = *f.envelope_inf(), &b = *g.envelope_inf();
        out.set_envelope_inf({a.coef * b.coef, a.decay + b.decay, a.log_pow + b.log_pow,
                              std::max(a.from, b.from)});
    }
    if (f.envelope_zero() && g.envelope_zero()) {
        const auto &a = *f.envelope_zero(), &b = *g.envelope_zero();
        out.set_envelope_zero({a.coef * b.coef, a.growth + b.growth, a.log_pow + b.log_pow,
                               std::min(a.upto, b.upto)});
    }
    std::vector<double> kk = f.kinks();
    kk.insert(kk.end(), g.kinks().begin(), g.kinks().end());
    out.set_kinks(std::move(kk));
    return out;
}

}  // namespace rinorms
