#pragma once

// N-functions and the Luxemburg gauge.
//
// Pure powers are kept in closed form; everything else lives on a log-log
// grid with linear interpolation, which is exact on powers and monotone by
// construction.  The complementary function is built through its inverse,
// t -> t / Phi^{-1}(t), sampled on a 512-point grid spanning [1e-12, 1e12].

#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rinorms/eval_fn.hpp"
#include "rinorms/quadrature.hpp"
#include "rinorms/step_fn.hpp"

namespace rinorms {

class NFunction {
public:
    // Phi(x) = x^p, p >= 1.
    static NFunction power(double p) {
        check_exponent(p);
        NFunction n;
        n.kind_ = Kind::power;
        n.p_ = p;
        n.scale_ = 1.0;
        return n;
    }

    // Phi(x) = x^p / p.
    static NFunction power_scaled(double p) {
        check_exponent(p);
        NFunction n;
        n.kind_ = Kind::power;
        n.p_ = p;
        n.scale_ = 1.0 / p;
        return n;
    }

    // Samples (x_i, Phi(x_i)); both sequences must be strictly increasing and
    // positive.  Values between samples interpolate linearly in log-log; the
    // end segments extrapolate with their slopes.
    static NFunction sampled(std::vector<double> xs, std::vector<double> phis) {
        if (xs.size() != phis.size() || xs.size() < 2)
            throw std::invalid_argument("NFunction::sampled: need two matching samples or more");
        NFunction n;
        n.kind_ = Kind::sampled;
        n.lx_.reserve(xs.size());
        n.ly_.reserve(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (!(xs[i] > 0.0) || !(phis[i] > 0.0))
                throw std::invalid_argument("NFunction::sampled: samples must be positive");
            if (i > 0 && (!(xs[i] > xs[i - 1]) || !(phis[i] > phis[i - 1])))
                throw std::invalid_argument("NFunction::sampled: samples must be strictly increasing");
            n.lx_.push_back(std::log(xs[i]));
            n.ly_.push_back(std::log(phis[i]));
        }
        return n;
    }

    double operator()(double x) const {
        if (x <= 0.0) return 0.0;
        if (kind_ == Kind::power) return scale_ * std::pow(x, p_);
        return std::exp(interp(lx_, ly_, std::log(x)));
    }

    double inverse(double y) const {
        if (y <= 0.0) return 0.0;
        if (kind_ == Kind::power) return std::pow(y / scale_, 1.0 / p_);
        return std::exp(interp(ly_, lx_, std::log(y)));
    }

    bool is_power() const { return kind_ == Kind::power; }
    double power_exponent() const { return p_; }

    // Local log-log slope of Phi at small / large arguments.
    double growth_at_zero() const {
        if (kind_ == Kind::power) return p_;
        return (ly_[1] - ly_[0]) / (lx_[1] - lx_[0]);
    }
    double growth_at_inf() const {
        if (kind_ == Kind::power) return p_;
        std::size_t k = lx_.size();
        return (ly_[k - 1] - ly_[k - 2]) / (lx_[k - 1] - lx_[k - 2]);
    }

private:
    enum class Kind { power, sampled };
    Kind kind_ = Kind::power;
    double p_ = 2.0, scale_ = 1.0;
    std::vector<double> lx_, ly_;

    static void check_exponent(double p) {
        if (!(p >= 1.0) || !std::isfinite(p))
            throw std::invalid_argument("NFunction: exponent must satisfy p >= 1");
    }

    static double interp(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
        std::size_t n = xs.size();
        std::size_t j;
        if (x <= xs[0]) j = 0;
        else if (x >= xs[n - 2]) j = n - 2;
        else j = static_cast<std::size_t>(std::upper_bound(xs.begin(), xs.end(), x) - xs.begin()) - 1;
        double s = (ys[j + 1] - ys[j]) / (xs[j + 1] - xs[j]);
        return ys[j] + s * (x - xs[j]);
    }
};

inline constexpr int kNFunctionGridSize = 512;
inline constexpr double kNFunctionGridLo = 1e-12;
inline constexpr double kNFunctionGridHi = 1e12;

// Complementary N-function via its inverse t -> t / Phi^{-1}(t).
inline NFunction complementary(const NFunction& a) {
    if (a.is_power()) {
        double p = a.power_exponent();
        if (p > 1.0) return NFunction::power(p / (p - 1.0));
    }
    std::vector<double> xs, ys;
    xs.reserve(kNFunctionGridSize);
    ys.reserve(kNFunctionGridSize);
    double llo = std::log(kNFunctionGridLo), lhi = std::log(kNFunctionGridHi);
    for (int i = 0; i < kNFunctionGridSize; ++i) {
        double t = std::exp(llo + (lhi - llo) * i / (kNFunctionGridSize - 1));
        double inv = a.inverse(t);
        if (!(inv > 0.0) || !std::isfinite(inv))
            throw std::domain_error("complementary: non-invertible N-function");
        xs.push_back(t / inv);
        ys.push_back(t);
    }
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1]))
            throw std::domain_error("complementary: non-invertible N-function");
    return NFunction::sampled(std::move(xs), std::move(ys));
}

// B1(t) = 1 / A1~(1/t) from the complementary function A1~.
inline NFunction b1_from_a1(const NFunction& a1) {
    NFunction at = complementary(a1);
    if (a1.is_power()) {
        // 1 / (1/t)^{p'} = t^{p'}.
        return NFunction::power(a1.power_exponent() / (a1.power_exponent() - 1.0));
    }
    std::vector<double> xs, ys;
    double llo = std::log(kNFunctionGridLo), lhi = std::log(kNFunctionGridHi);
    for (int i = 0; i < kNFunctionGridSize; ++i) {
        double t = std::exp(llo + (lhi - llo) * i / (kNFunctionGridSize - 1));
        xs.push_back(t);
        ys.push_back(1.0 / at(1.0 / t));
    }
    return NFunction::sampled(std::move(xs), std::move(ys));
}

struct RatioMonotonicity {
    bool nonincreasing = true;
    bool nondecreasing = true;
    double worst_violation = 0.0;  // relative size of the largest monotonicity breach
};

// Monotonicity of Phi(t)/t^r on a log grid.
inline RatioMonotonicity ratio_monotonicity(const NFunction& phi, double r, double lo = 1e-8,
                                            double hi = 1e8, int n = 257) {
    RatioMonotonicity out;
    double prev = 0.0;
    for (int i = 0; i < n; ++i) {
        double t = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (n - 1));
        double v = phi(t) / std::pow(t, r);
        if (i > 0) {
            if (v > prev * (1.0 + 1e-12)) {
                out.nonincreasing = false;
                out.worst_violation = std::max(out.worst_violation, v / prev - 1.0);
            }
            if (v < prev * (1.0 - 1e-12)) {
                out.nondecreasing = false;
                out.worst_violation = std::max(out.worst_violation, prev / v - 1.0);
            }
        }
        prev = v;
    }
    return out;
}

// Orlicz fundamental function 1 / Phi^{-1}(1/t).
inline double orlicz_fundamental(const NFunction& phi, double t) {
    return 1.0 / phi.inverse(1.0 / t);
}

// Luxemburg gauge of a StepFn: the modular is an exact finite sum, the gauge
// is found by bisection on the (strictly decreasing) modular.
inline double luxemburg_norm(const NFunction& phi, const StepFn& f) {
    if (!f.vanishes_at_infinity())
        throw std::domain_error("luxemburg_norm: infinite level sets");
    if (f.is_zero()) return 0.0;
    auto pieces = finite_pieces(f);
    auto modular = [&](double lam) {
        double m = 0.0;
        for (const auto& [v, len] : pieces)
            if (v > 0.0) m += phi(v / lam) * len;
        return m;
    };
    double lam = f.max_value();
    if (!(lam > 0.0)) return 0.0;
    double lo, hi;
    if (modular(lam) > 1.0) {
        do {
            lam *= 2.0;
            if (lam > 1e300) throw std::runtime_error("luxemburg_norm: modular never <= 1");
        } while (modular(lam) > 1.0);
        lo = lam / 2.0;
        hi = lam;
    } else {
        do {
            lam *= 0.5;
            if (lam < 1e-300) return 0.0;
        } while (modular(lam) <= 1.0);
        lo = lam;
        hi = lam * 2.0;
    }
    for (int it = 0; it < 200 && (hi - lo) > 1e-12 * hi; ++it) {
        double mid = 0.5 * (lo + hi);
        (modular(mid) > 1.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Luxemburg gauge of a decreasing EvalFn; the modular is a certified
// quadrature, with the integrand envelope derived from the power growth of
// Phi at both ends (exact for power Phi, grid-validated otherwise).
inline double luxemburg_norm(const NFunction& phi, const EvalFn& h, const QuadSpec& spec = {}) {
    if (!h.envelope_inf() || !h.envelope_zero())
        throw std::invalid_argument("luxemburg_norm: EvalFn needs envelopes at both ends");
    const double q0 = phi.growth_at_zero();   // Phi(x) ~ x^{q0}, x -> 0
    const double qi = phi.growth_at_inf();

    // Constants K with Phi(x) <= K x^q on the relevant side (2x safety when
    // the function is not a pure power).
    double k0 = 1.0, ki = 1.0;
    if (!phi.is_power()) {
        for (int i = 0; i < 64; ++i) {
            double x = std::exp(std::log(1e-10) + (std::log(1.0) - std::log(1e-10)) * i / 63.0);
            k0 = std::max(k0, phi(x) / std::pow(x, q0));
            double y = std::exp(std::log(1.0) + (std::log(1e10) - std::log(1.0)) * i / 63.0);
            ki = std::max(ki, phi(y) / std::pow(y, qi));
        }
        k0 *= 2.0;
        ki *= 2.0;
    } else {
        k0 = ki = phi(1.0);
    }

    // Phi(x) <= M max(x^{q0}, x^{qi}) with M = max(k0, ki); the decay side
    // keeps the slower exponent q0, the growth side the faster qi, so both
    // stay upper bounds wherever the argument crosses 1.
    const double M = std::max(k0, ki);
    auto modular = [&](double lam) {
        auto he = h;
        EvalFn g([he, &phi, lam](double t) { return phi(he(t) / lam); }, Monotone::decreasing);
        const auto& ei = *h.envelope_inf();
        const auto& ez = *h.envelope_zero();
        double ci = ei.coef / lam, cz = ez.coef / lam;
        g.set_envelope_inf({M * std::max(std::pow(ci, q0), std::pow(ci, qi)),
                            ei.decay * q0, ei.log_pow * qi, ei.from});
        g.set_envelope_zero({M * std::max(std::pow(cz, q0), std::pow(cz, qi)),
                             ez.growth * qi, ez.log_pow * qi, ez.upto});
        g.set_kinks(h.kinks());
        return integrate_all(g, spec).value;
    };

    double lam = std::max(h(1.0), 1e-8);
    double lo, hi;
    if (modular(lam) > 1.0) {
        do {
            lam *= 2.0;
            if (lam > 1e300) throw std::runtime_error("luxemburg_norm: modular never <= 1");
        } while (modular(lam) > 1.0);
        lo = lam / 2.0;
        hi = lam;
    } else {
        do {
            lam *= 0.5;
            if (lam < 1e-300) return 0.0;
        } while (modular(lam) <= 1.0);
        lo = lam;
        hi = lam * 2.0;
    }
    for (int it = 0; it < 100 && (hi - lo) > 1e-10 * hi; ++it) {
        double mid = 0.5 * (lo + hi);
        (modular(mid) > 1.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace rinorms
