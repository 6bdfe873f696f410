#pragma once

// Rearrangement-invariant norm functionals: Lebesgue, Lambda (star) and
// Gamma (double-star) weighted norms, the Orlicz gauge, the power lift
// rho^{(p)}, the K-functional interpolation norm, and the largest-domain
// composition with the window operator U.
//
// Evaluation always routes through the exact rearrangement, so only
// half-line functionals appear.  StepFn inputs use exact piece arithmetic
// wherever the mathematics allows (Lambda, Lebesgue, Orlicz modulars,
// K-functionals); quadrature-backed paths (Gamma, compositions) carry
// certified error from the quadrature engine.  Divergence is reported as
// +inf, matching the convention of the weight layer.

#include <cmath>
#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <variant>

#include "rinorms/hardy.hpp"
#include "rinorms/nfunction.hpp"
#include "rinorms/weight_transforms.hpp"

namespace rinorms {

inline bool admissible(const WeightFn& w, double p) {
    bool z = powlog_integrable_at_zero(w.at_zero.power, w.at_zero.log_power);
    bool i = powlog_integrable_at_inf(w.at_inf.power - p, w.at_inf.log_power);
    return z && i;
}

class NormSpec {
public:
    enum class Kind { lebesgue, lambda, gamma, orlicz, boyd_power, mu_interp, largest_domain };

    static NormSpec lebesgue(double p) {
        require(p >= 1.0, "lebesgue: p >= 1 required");
        NormSpec s(Kind::lebesgue, p);
        return s;
    }

    static NormSpec lambda(double p, Weight u) {
        require(p > 1.0, "lambda: p > 1 required");
        require(rinorms::admissible(u, p).convergent(), "lambda: inadmissible weight");
        NormSpec s(Kind::lambda, p);
        s.weight_ = std::move(u);
        return s;
    }

    static NormSpec gamma(double p, Weight u) {
        require(p > 1.0, "gamma: p > 1 required");
        require(rinorms::admissible(u, p).convergent(), "gamma: inadmissible weight");
        NormSpec s(Kind::gamma, p);
        s.weight_ = std::move(u);
        return s;
    }

    static NormSpec lambda(double p, WeightFn u) {
        require(p > 1.0, "lambda: p > 1 required");
        require(rinorms::admissible(u, p), "lambda: inadmissible weight");
        NormSpec s(Kind::lambda, p);
        s.weight_ = std::move(u);
        return s;
    }

    static NormSpec gamma(double p, WeightFn u) {
        require(p > 1.0, "gamma: p > 1 required");
        require(rinorms::admissible(u, p), "gamma: inadmissible weight");
        NormSpec s(Kind::gamma, p);
        s.weight_ = std::move(u);
        return s;
    }

    static NormSpec orlicz(NFunction phi) {
        NormSpec s(Kind::orlicz, 0.0);
        s.phi_ = std::move(phi);
        return s;
    }

    static NormSpec boyd_power(NormSpec base, double p) {
        require(p > 1.0, "boyd_power: p > 1 required");
        NormSpec s(Kind::boyd_power, p);
        s.base_ = std::make_shared<NormSpec>(std::move(base));
        return s;
    }

    static NormSpec mu_interp(NormSpec mu, double p);         // defined after norm_value
    static NormSpec largest_domain(NormSpec base);

    Kind kind() const { return kind_; }
    double p() const { return p_; }
    bool has_plain_weight() const { return std::holds_alternative<Weight>(weight_); }
    const Weight& weight() const { return std::get<Weight>(weight_); }
    const WeightFn& weight_fn() const { return std::get<WeightFn>(weight_); }
    const NFunction& phi() const { return *phi_; }
    const NormSpec& base() const { return *base_; }

    EvalFn weight_eval() const {
        return has_plain_weight() ? to_eval(weight()) : weight_fn().as_eval();
    }

private:
    NormSpec(Kind k, double p) : kind_(k), p_(p) {}
    static void require(bool ok, const char* msg) {
        if (!ok) throw std::domain_error(msg);
    }

    Kind kind_;
    double p_;
    std::variant<std::monostate, Weight, WeightFn> weight_;
    std::optional<NFunction> phi_;
    std::shared_ptr<const NormSpec> base_;

    friend double norm_value(const NormSpec&, const StepFn&, const QuadSpec&);
    friend double norm_value(const NormSpec&, const EvalFn&, const QuadSpec&);
};

// K(t, f; L_p, L_inf) equivalent: (int_0^{t^p} f*(s)^p ds)^{1/p}, exact.
inline double k_functional_p(const StepFn& f, double t, double p) {
    if (!(t > 0.0) || !(p >= 1.0)) throw std::invalid_argument("k_functional_p: need t > 0, p >= 1");
    return std::pow(rearrange(f).powed(p).integral_to(std::pow(t, p)), 1.0 / p);
}

namespace detail {

// sum over pieces of f* of w_i^p * int_{piece} u, exact per-piece integrals.
template <class Primitive>
double lambda_norm_impl(double p, Primitive&& prim, const StepFn& f) {
    StepFn r = rearrange(f);
    if (r.is_zero()) return 0.0;
    double acc = 0.0, prev_at = 0.0, prev = 0.0;
    const auto& bps = r.breakpoints();
    const auto& vals = r.values();
    for (std::size_t i = 0; i < bps.size(); ++i) {
        double here = prim(bps[i]);
        if (std::isinf(here)) return std::numeric_limits<double>::infinity();
        if (vals[i] > 0.0) acc += std::pow(vals[i], p) * (here - prev_at);
        prev_at = here;
        prev = bps[i];
    }
    (void)prev;
    return std::pow(acc, 1.0 / p);
}

inline EvalFn mu_interp_inner(const StepFn& f, double p) {
    StepFn r = rearrange(f);
    StepFn rp = r.powed(p);
    EvalFn out([rp, p](double t) {
        return std::pow(rp.integral_to(std::pow(t, p)), 1.0 / p) / t;
    }, Monotone::decreasing);
    std::vector<double> kk;
    for (double b : r.breakpoints()) kk.push_back(std::pow(b, 1.0 / p));
    out.set_kinks(std::move(kk));
    out.set_envelope_zero({r.max_value(), 0.0, 0.0, 1.0});
    double total = std::pow(rp.integral(), 1.0 / p);
    out.set_envelope_inf({total, 1.0, 0.0, std::max(1.0, std::pow(r.support_end(), 1.0 / p))});
    return out;
}

inline EvalFn mu_interp_inner(const EvalFn& h, double p, const QuadSpec& spec) {
    auto hp = h.powed(p);
    EvalFn out([hp, p, spec](double t) {
        return std::pow(integrate_from_zero(hp, std::pow(t, p), spec).value, 1.0 / p) / t;
    }, Monotone::decreasing);
    out.set_kinks(h.kinks());
    if (h.envelope_zero()) {
        const auto& z = *h.envelope_zero();
        out.set_envelope_zero({z.coef * std::pow(p, z.log_pow) * 2.0, z.growth * p,
                               z.log_pow, std::pow(z.upto, 1.0 / p)});
    }
    IntegralResult tot = integrate_all(hp, spec);
    if (!tot.divergent())
        out.set_envelope_inf({std::pow(tot.value + tot.error_bound, 1.0 / p), 1.0, 0.0,
                              std::exp(1.0)});
    return out;
}

inline EvalFn window_u(const EvalFn& h, const QuadSpec& spec) {
    auto base = h;
    EvalFn out([base, spec](double t) {
        return integrate_from_zero(base, 1.0 / t, spec).value;
    }, Monotone::decreasing);
    if (h.envelope_zero()) {
        const auto& z = *h.envelope_zero();
        // int_0^{1/t} h <= 2 coef (1/t)^{1-g} L^e / (1-g) for large t.
        out.set_envelope_inf({2.0 * z.coef / (1.0 - z.growth), 1.0 - z.growth, z.log_pow,
                              std::max(1.0 / z.upto, std::exp(1.0))});
    }
    IntegralResult tot = integrate_all(h, spec);
    out.set_envelope_zero({tot.divergent() ? std::numeric_limits<double>::infinity()
                                           : tot.value + tot.error_bound,
                           0.0, 0.0, 1.0});
    std::vector<double> kk;
    for (double k : h.kinks()) kk.push_back(1.0 / k);
    out.set_kinks(std::move(kk));
    return out;
}

}  // namespace detail

double norm_value(const NormSpec& spec, const StepFn& f, const QuadSpec& q = {});
double norm_value(const NormSpec& spec, const EvalFn& h, const QuadSpec& q = {});

// Gamma norm (int (f**)^p u)^{1/p}; requires an admissible weight.
inline double gamma_norm(double p, const Weight& u, const StepFn& f, const QuadSpec& spec = {}) {
    if (!admissible(u, p).convergent())
        throw std::domain_error("gamma_norm: inadmissible weight");
    if (f.is_zero()) return 0.0;
    EvalFn integrand = product(double_star(f).powed(p), to_eval(u));
    IntegralResult r = integrate_all(integrand, spec);
    return std::pow(r.value, 1.0 / p);
}

inline double gamma_norm(double p, const WeightFn& u, const StepFn& f, const QuadSpec& spec = {}) {
    if (!admissible(u, p))
        throw std::domain_error("gamma_norm: inadmissible weight");
    if (f.is_zero()) return 0.0;
    EvalFn integrand = product(double_star(f).powed(p), u.as_eval());
    IntegralResult r = integrate_all(integrand, spec);
    return std::pow(r.value, 1.0 / p);
}

// Lambda norm (int (f*)^p u)^{1/p}; exact piece sums against certified
// weight primitives.  Divergence at the origin under positive f*(0+) yields
// +inf rather than an error.
inline double lambda_norm(double p, const Weight& u, const StepFn& f, const QuadSpec& spec = {}) {
    return detail::lambda_norm_impl(p, [&](double t) { return primitive(u, t, spec).value; }, f);
}

inline double lambda_norm(double p, const WeightFn& u, const StepFn& f, const QuadSpec& spec = {}) {
    return detail::lambda_norm_impl(p, [&](double t) { return primitive(u, t, spec).value; }, f);
}

// rho_{mu,p}(f) = mu( t^{-1} [int_0^{t^p} f*(s)^p ds]^{1/p} ).
inline double mu_interp_norm(const NormSpec& mu, double p, const StepFn& f,
                             const QuadSpec& spec = {}) {
    double hyp = norm_value(mu, one_over_one_plus_t(), spec);
    if (!std::isfinite(hyp))
        throw std::domain_error("mu_interp_norm: base norm of 1/(1+t) is not finite");
    if (f.is_zero()) return 0.0;
    return norm_value(mu, detail::mu_interp_inner(f, p), spec);
}

// rho_U(f) = base(U f*).
inline double largest_domain_norm(const NormSpec& base, const StepFn& f,
                                  const QuadSpec& spec = {}) {
    double hyp = norm_value(base, one_over_one_plus_t(), spec);
    if (!std::isfinite(hyp))
        throw std::domain_error("largest_domain_norm: base norm of 1/(1+t) is not finite");
    if (f.is_zero()) return 0.0;
    return norm_value(base, op_U(f), spec);
}

inline double norm_value(const NormSpec& spec, const StepFn& f, const QuadSpec& q) {
    switch (spec.kind()) {
        case NormSpec::Kind::lebesgue:
            return std::pow(f.integral_pow(spec.p()), 1.0 / spec.p());
        case NormSpec::Kind::lambda:
            return spec.has_plain_weight() ? lambda_norm(spec.p(), spec.weight(), f, q)
                                           : lambda_norm(spec.p(), spec.weight_fn(), f, q);
        case NormSpec::Kind::gamma:
            return spec.has_plain_weight() ? gamma_norm(spec.p(), spec.weight(), f, q)
                                           : gamma_norm(spec.p(), spec.weight_fn(), f, q);
        case NormSpec::Kind::orlicz:
            return luxemburg_norm(spec.phi(), f);
        case NormSpec::Kind::boyd_power:
            return std::pow(norm_value(spec.base(), f.powed(spec.p()), q), 1.0 / spec.p());
        case NormSpec::Kind::mu_interp:
            return mu_interp_norm(spec.base(), spec.p(), f, q);
        case NormSpec::Kind::largest_domain:
            return largest_domain_norm(spec.base(), f, q);
    }
    throw std::logic_error("norm_value: unknown kind");
}

// Norm of a nonincreasing evaluable function (its own rearrangement).
inline double norm_value(const NormSpec& spec, const EvalFn& h, const QuadSpec& q) {
    switch (spec.kind()) {
        case NormSpec::Kind::lebesgue: {
            IntegralResult r = integrate_all(h.powed(spec.p()), q);
            return std::pow(r.value, 1.0 / spec.p());
        }
        case NormSpec::Kind::lambda: {
            IntegralResult r = integrate_all(product(h.powed(spec.p()), spec.weight_eval()), q);
            return std::pow(r.value, 1.0 / spec.p());
        }
        case NormSpec::Kind::gamma: {
            EvalFn hh = hardy_P(h, q);
            IntegralResult r = integrate_all(product(hh.powed(spec.p()), spec.weight_eval()), q);
            return std::pow(r.value, 1.0 / spec.p());
        }
        case NormSpec::Kind::orlicz:
            return luxemburg_norm(spec.phi(), h, q);
        case NormSpec::Kind::boyd_power:
            return std::pow(norm_value(spec.base(), h.powed(spec.p()), q), 1.0 / spec.p());
        case NormSpec::Kind::mu_interp:
            return norm_value(spec.base(), detail::mu_interp_inner(h, spec.p(), q), q);
        case NormSpec::Kind::largest_domain:
            return norm_value(spec.base(), detail::window_u(h, q), q);
    }
    throw std::logic_error("norm_value: unknown kind");
}

inline NormSpec NormSpec::mu_interp(NormSpec mu, double p) {
    require(p >= 1.0, "mu_interp: p >= 1 required");
    double hyp = norm_value(mu, one_over_one_plus_t(), QuadSpec{});
    require(std::isfinite(hyp), "mu_interp: base norm of 1/(1+t) is not finite");
    NormSpec s(Kind::mu_interp, p);
    s.base_ = std::make_shared<NormSpec>(std::move(mu));
    return s;
}

inline NormSpec NormSpec::largest_domain(NormSpec base) {
    double hyp = norm_value(base, one_over_one_plus_t(), QuadSpec{});
    require(std::isfinite(hyp), "largest_domain: base norm of 1/(1+t) is not finite");
    NormSpec s(Kind::largest_domain, 0.0);
    s.base_ = std::make_shared<NormSpec>(std::move(base));
    return s;
}

// Fundamental function: the norm of the indicator of (0, t), with closed
// compositions where the norm family has them.
inline double fundamental_function(const NormSpec& spec, double t, const QuadSpec& q = {}) {
    if (!(t > 0.0)) throw std::invalid_argument("fundamental_function: t > 0 required");
    switch (spec.kind()) {
        case NormSpec::Kind::lebesgue:
            return std::pow(t, 1.0 / spec.p());
        case NormSpec::Kind::lambda: {
            double v = spec.has_plain_weight() ? primitive(spec.weight(), t, q).value
                                               : primitive(spec.weight_fn(), t, q).value;
            return std::pow(v, 1.0 / spec.p());
        }
        case NormSpec::Kind::gamma: {
            double a, b;
            if (spec.has_plain_weight()) {
                a = primitive(spec.weight(), t, q).value;
                b = tail_p(spec.weight(), t, spec.p(), q).value;
            } else {
                a = primitive(spec.weight_fn(), t, q).value;
                b = tail_p(spec.weight_fn(), t, spec.p(), q).value;
            }
            return std::pow(a + std::pow(t, spec.p()) * b, 1.0 / spec.p());
        }
        case NormSpec::Kind::orlicz:
            return orlicz_fundamental(spec.phi(), t);
        case NormSpec::Kind::boyd_power:
            return std::pow(fundamental_function(spec.base(), t, q), 1.0 / spec.p());
        default:
            return norm_value(spec, StepFn::indicator(t), q);
    }
}

}  // namespace rinorms
