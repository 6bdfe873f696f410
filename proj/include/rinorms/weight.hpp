#pragma once

// Piecewise power-log weights c * t^a * |ln t|^b on a finite partition of
// (0, inf).  The family contains every weight used by the checkers and is
// closed under reflection t -> 1/t, multiplication by powers of t, and
// pointwise products.  Step-function weights enter as a fallback and are
// represented by constant pieces (a = b = 0).
//
// Integrals of weights are exact where the power-log engine has closed forms
// and certified quadrature elsewhere; divergence is decided by the exponent
// rule and reported as a +inf value, not as an error.

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rinorms/eval_fn.hpp"
#include "rinorms/powlog.hpp"
#include "rinorms/step_fn.hpp"

namespace rinorms {

struct WeightPiece {
    double lo, hi;  // [lo, hi), partition cell
    double c, a, b; // c * t^a * |ln t|^b
};

class Weight {
public:
    static Weight power(double c, double a) {
        return Weight({{0.0, kInf, c, a, 0.0}}, std::nullopt);
    }

    static Weight from_pieces(std::vector<WeightPiece> pieces) {
        return Weight(std::move(pieces), std::nullopt);
    }

    static Weight from_step(const StepFn& f) {
        std::vector<WeightPiece> ps;
        double prev = 0.0;
        for (std::size_t i = 0; i < f.breakpoints().size(); ++i) {
            ps.push_back({prev, f.breakpoints()[i], f.values()[i], 0.0, 0.0});
            prev = f.breakpoints()[i];
        }
        ps.push_back({prev, kInf, f.values().back(), 0.0, 0.0});
        return Weight(std::move(ps), f);
    }

    const std::vector<WeightPiece>& pieces() const { return pieces_; }
    bool is_step() const { return step_.has_value(); }
    const StepFn& step() const { return *step_; }

    double eval(double t) const {
        const WeightPiece& p = piece_at(t);
        if (p.c == 0.0) return 0.0;
        double w = p.c * std::pow(t, p.a);
        if (p.b != 0.0) w *= std::pow(std::abs(std::log(t)), p.b);
        return w;
    }

    const WeightPiece& first_piece() const { return pieces_.front(); }
    const WeightPiece& last_piece() const { return pieces_.back(); }

    std::vector<double> kinks() const {
        std::vector<double> k;
        for (std::size_t i = 1; i < pieces_.size(); ++i) k.push_back(pieces_[i].lo);
        k.push_back(1.0);
        return k;
    }

    Weight times_power(double gamma) const {
        std::vector<WeightPiece> ps = pieces_;
        for (auto& p : ps) p.a += gamma;
        return Weight(std::move(ps), std::nullopt);
    }

    friend Weight pointwise_product(const Weight& u, const Weight& v) {
        std::vector<WeightPiece> ps;
        std::size_t i = 0, j = 0;
        double lo = 0.0;
        while (true) {
            const WeightPiece& a = u.pieces_[i];
            const WeightPiece& b = v.pieces_[j];
            double hi = std::min(a.hi, b.hi);
            ps.push_back({lo, hi, a.c * b.c, a.a + b.a, a.b + b.b});
            if (std::isinf(hi)) break;
            if (a.hi == hi) ++i;
            if (b.hi == hi) ++j;
            lo = hi;
        }
        return Weight(std::move(ps), std::nullopt);
    }

private:
    static constexpr double kInf = std::numeric_limits<double>::infinity();

    std::vector<WeightPiece> pieces_;
    std::optional<StepFn> step_;

    Weight(std::vector<WeightPiece> pieces, std::optional<StepFn> step)
        : pieces_(std::move(pieces)), step_(std::move(step)) {
        validate();
    }

    const WeightPiece& piece_at(double t) const {
        for (const auto& p : pieces_)
            if (t < p.hi) return p;
        return pieces_.back();
    }

    void validate() const {
        if (pieces_.empty()) throw std::invalid_argument("Weight: no pieces");
        if (pieces_.front().lo != 0.0 || !std::isinf(pieces_.back().hi))
            throw std::invalid_argument("Weight: pieces must cover (0, inf)");
        double prev_hi = 0.0;
        bool any_positive = false;
        for (const auto& p : pieces_) {
            if (p.lo != prev_hi || !(p.hi > p.lo))
                throw std::invalid_argument("Weight: pieces must partition (0, inf) without gaps");
            prev_hi = p.hi;
            if (!(p.c >= 0.0) || !std::isfinite(p.c) || !std::isfinite(p.a) || !std::isfinite(p.b))
                throw std::invalid_argument("Weight: coefficients must be finite, c >= 0");
            if (p.c > 0.0) any_positive = true;
            // A log factor with b <= -1 touching t = 1 is non-integrable there.
            if (p.c > 0.0 && p.b <= -1.0 && p.lo <= 1.0 && p.hi >= 1.0)
                throw std::invalid_argument(
                    "Weight: piece with b <= -1 touching t = 1 is not locally integrable");
        }
        if (!any_positive) throw std::invalid_argument("Weight: identically zero");
    }
};

struct ConvergenceVerdict {
    bool convergent_at_zero = true;
    bool convergent_at_infinity = true;
    enum class DecidedBy { exponent_rule, quadrature } decided_by = DecidedBy::exponent_rule;

    bool convergent() const { return convergent_at_zero && convergent_at_infinity; }
};

// int_0^t u, certified; +inf when u is not integrable at the origin.
inline IntegralResult primitive(const Weight& u, double t, const QuadSpec& spec = {}) {
    if (!(t > 0.0)) throw std::invalid_argument("primitive: t > 0 required");
    IntegralResult total{0.0, 0.0};
    for (const auto& p : u.pieces()) {
        if (p.lo >= t) break;
        IntegralResult r = powlog_integral(p.c, p.a, p.b, p.lo, std::min(p.hi, t), spec);
        if (r.divergent()) return {std::numeric_limits<double>::infinity(), 0.0};
        total.value += r.value;
        total.error_bound += r.error_bound;
    }
    return total;
}

// int_t^inf u(s) s^{-p} ds, certified; +inf when divergent at infinity.
inline IntegralResult tail_p(const Weight& u, double t, double p, const QuadSpec& spec = {}) {
    if (!(t > 0.0)) throw std::invalid_argument("tail_p: t > 0 required");
    IntegralResult total{0.0, 0.0};
    for (const auto& pc : u.pieces()) {
        if (pc.hi <= t) continue;
        IntegralResult r = powlog_integral(pc.c, pc.a - p, pc.b, std::max(pc.lo, t), pc.hi, spec);
        if (r.divergent()) return {std::numeric_limits<double>::infinity(), 0.0};
        total.value += r.value;
        total.error_bound += r.error_bound;
    }
    return total;
}

// u_p(t) = u(1/t) t^{p-2}; exact within the family.
inline Weight reflect_p(const Weight& u, double p) {
    std::vector<WeightPiece> out;
    const auto& ps = u.pieces();
    for (std::size_t i = ps.size(); i-- > 0;) {
        const auto& pc = ps[i];
        double lo = std::isinf(pc.hi) ? 0.0 : 1.0 / pc.hi;
        double hi = pc.lo == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / pc.lo;
        out.push_back({lo, hi, pc.c, p - 2.0 - pc.a, pc.b});
    }
    return Weight::from_pieces(std::move(out));
}

// Convergence of int u(t) / (1+t)^p dt by the exponent rule.
inline ConvergenceVerdict admissible(const Weight& u, double p) {
    ConvergenceVerdict v;
    const auto& f = u.first_piece();
    const auto& l = u.last_piece();
    v.convergent_at_zero = f.c == 0.0 || powlog_integrable_at_zero(f.a, f.b);
    v.convergent_at_infinity = l.c == 0.0 || powlog_integrable_at_inf(l.a - p, l.b);
    v.decided_by = ConvergenceVerdict::DecidedBy::exponent_rule;
    return v;
}

// Whether int_0^inf u = inf (a hypothesis several transforms require).
inline bool has_infinite_mass(const Weight& u) {
    const auto& f = u.first_piece();
    if (f.c > 0.0 && !powlog_integrable_at_zero(f.a, f.b)) return true;
    const auto& l = u.last_piece();
    return l.c > 0.0 && !powlog_integrable_at_inf(l.a, l.b);
}

// View as an EvalFn (exact evaluation, envelopes read off the end pieces).
inline EvalFn to_eval(const Weight& u) {
    EvalFn out([u](double t) { return u.eval(t); });
    out.set_kinks(u.kinks());
    const auto& f = u.first_piece();
    out.set_envelope_zero({f.c, -f.a, std::max(f.b, 0.0),
                           std::min(f.hi, std::exp(-1.0))});
    const auto& l = u.last_piece();
    out.set_envelope_inf({l.c, -l.a, std::max(l.b, 0.0),
                          std::max(l.lo, std::exp(1.0))});
    return out;
}

}  // namespace rinorms
