#pragma once

// Exact algebra of nonnegative piecewise-constant functions on (0, inf).
//
// A StepFn holds strictly increasing breakpoints b_1 < ... < b_k and values
// v_0, ..., v_k with v_i taken on [b_i, b_{i+1}) (b_0 = 0, b_{k+1} = inf),
// i.e. evaluation is right-continuous.  Construction canonicalizes: adjacent
// equal values are merged, so representations are unique and comparable with
// operator==.  All operations here are exact in the sense that they perform
// only the floating-point operations forced by the mathematics (no grids, no
// quadrature).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace rinorms {

class StepFn {
public:
    // Zero function.
    StepFn() : values_{0.0} {}

    StepFn(std::vector<double> breakpoints, std::vector<double> values)
        : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
        validate();
        canonicalize();
    }

    // c on [a, b), zero elsewhere.  a == 0 gives the half-open block c*chi_(0,b).
    static StepFn block(double a, double b, double c) {
        if (!(a >= 0.0) || !(b > a)) throw std::invalid_argument("StepFn::block: need 0 <= a < b");
        if (a == 0.0) return StepFn({b}, {c, 0.0});
        return StepFn({a, b}, {0.0, c, 0.0});
    }

    static StepFn indicator(double b) { return block(0.0, b, 1.0); }

    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<double>& values() const { return values_; }
    std::size_t piece_count() const { return values_.size(); }

    bool is_zero() const { return breakpoints_.empty() && values_[0] == 0.0; }
    double tail_value() const { return values_.back(); }
    bool vanishes_at_infinity() const { return values_.back() == 0.0; }

    // Right-continuous evaluation; piece index = number of breakpoints <= t.
    double value_at(double t) const {
        auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
        return values_[static_cast<std::size_t>(it - breakpoints_.begin())];
    }

    double max_value() const { return *std::max_element(values_.begin(), values_.end()); }

    // End of the support when the function vanishes at infinity (0 for the
    // zero function); +inf otherwise.
    double support_end() const {
        if (!vanishes_at_infinity()) return std::numeric_limits<double>::infinity();
        for (std::size_t i = breakpoints_.size(); i-- > 0;) {
            if (values_[i] > 0.0) return breakpoints_[i];
        }
        return 0.0;
    }

    // Integral over (0, inf); +inf when the tail value is positive.
    double integral() const {
        if (!vanishes_at_infinity()) return std::numeric_limits<double>::infinity();
        return integral_to(breakpoints_.empty() ? 0.0 : breakpoints_.back());
    }

    // Exact integral over (0, t].
    double integral_to(double t) const {
        if (t <= 0.0) return 0.0;
        double acc = 0.0, prev = 0.0;
        for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
            if (breakpoints_[i] >= t) {
                acc += values_[i] * (t - prev);
                return acc;
            }
            acc += values_[i] * (breakpoints_[i] - prev);
            prev = breakpoints_[i];
        }
        acc += values_.back() * (t - prev);
        return acc;
    }

    // Exact integral of f^p over (0, inf).
    double integral_pow(double p) const { return powed(p).integral(); }

    StepFn scaled(double c) const {
        if (!(c >= 0.0)) throw std::invalid_argument("StepFn::scaled: negative factor");
        std::vector<double> v(values_);
        for (double& x : v) x *= c;
        return StepFn(breakpoints_, std::move(v));
    }

    StepFn powed(double p) const {
        std::vector<double> v(values_);
        for (double& x : v) x = std::pow(x, p);
        return StepFn(breakpoints_, std::move(v));
    }

    friend StepFn operator+(const StepFn& f, const StepFn& g) {
        return combine(f, g, [](double a, double b) { return a + b; });
    }

    // Pointwise product; exact on the common refinement.
    friend StepFn pointwise_product(const StepFn& f, const StepFn& g) {
        return combine(f, g, [](double a, double b) { return a * b; });
    }

    friend StepFn pointwise_max(const StepFn& f, const StepFn& g) {
        return combine(f, g, [](double a, double b) { return std::max(a, b); });
    }

    friend bool operator==(const StepFn& f, const StepFn& g) {
        return f.breakpoints_ == g.breakpoints_ && f.values_ == g.values_;
    }
    friend bool operator!=(const StepFn& f, const StepFn& g) { return !(f == g); }

    // f <= g everywhere (checked on the common refinement, exact).
    friend bool pointwise_leq(const StepFn& f, const StepFn& g) {
        bool ok = true;
        combine(f, g, [&ok](double a, double b) {
            if (a > b) ok = false;
            return 0.0;
        });
        return ok;
    }

private:
    std::vector<double> breakpoints_;
    std::vector<double> values_;

    void validate() const {
        if (values_.size() != breakpoints_.size() + 1)
            throw std::invalid_argument("StepFn: values must have one more entry than breakpoints");
        double prev = 0.0;
        for (double b : breakpoints_) {
            if (!(b > prev) || !std::isfinite(b))
                throw std::invalid_argument("StepFn: breakpoints must be finite, strictly increasing, positive");
            prev = b;
        }
        for (double v : values_) {
            if (!(v >= 0.0) || !std::isfinite(v))
                throw std::invalid_argument("StepFn: values must be finite and nonnegative");
        }
    }

    void canonicalize() {
        std::vector<double> bps, vals;
        bps.reserve(breakpoints_.size());
        vals.reserve(values_.size());
        vals.push_back(values_[0]);
        for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
            if (values_[i + 1] != vals.back()) {
                bps.push_back(breakpoints_[i]);
                vals.push_back(values_[i + 1]);
            }
        }
        breakpoints_ = std::move(bps);
        values_ = std::move(vals);
    }

    template <class Op>
    static StepFn combine(const StepFn& f, const StepFn& g, Op op) {
        std::vector<double> bps;
        bps.reserve(f.breakpoints_.size() + g.breakpoints_.size());
        std::merge(f.breakpoints_.begin(), f.breakpoints_.end(),
                   g.breakpoints_.begin(), g.breakpoints_.end(), std::back_inserter(bps));
        bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
        std::vector<double> vals;
        vals.reserve(bps.size() + 1);
        std::size_t i = 0, j = 0;
        vals.push_back(op(f.values_[0], g.values_[0]));
        for (double b : bps) {
            while (i < f.breakpoints_.size() && f.breakpoints_[i] <= b) ++i;
            while (j < g.breakpoints_.size() && g.breakpoints_[j] <= b) ++j;
            vals.push_back(op(f.values_[i], g.values_[j]));
        }
        return StepFn(std::move(bps), std::move(vals));
    }
};

// Value/length pieces of f, in index order.  The implicit final piece of
// infinite length is omitted; callers needing it must check tail_value().
inline std::vector<std::pair<double, double>> finite_pieces(const StepFn& f) {
    std::vector<std::pair<double, double>> out;
    out.reserve(f.piece_count());
    double prev = 0.0;
    for (std::size_t i = 0; i < f.breakpoints().size(); ++i) {
        out.emplace_back(f.values()[i], f.breakpoints()[i] - prev);
        prev = f.breakpoints()[i];
    }
    return out;
}

inline bool is_nonincreasing(const StepFn& f) {
    const auto& v = f.values();
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[i - 1]) return false;
    return true;
}

// Nonincreasing rearrangement f*, exact.  Sorts (value, length) pieces by
// value descending, ties kept in original interval order, then concatenates.
// Already-nonincreasing inputs are returned unchanged, which makes the
// operation exactly idempotent.
inline StepFn rearrange(const StepFn& f) {
    if (!f.vanishes_at_infinity())
        throw std::domain_error("rearrange: infinite level sets");
    if (is_nonincreasing(f)) return f;

    auto pieces = finite_pieces(f);
    std::stable_sort(pieces.begin(), pieces.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    // Merge equal values before accumulating breakpoints so that equal-value
    // runs contribute a single exactly-summed length.
    std::vector<std::pair<double, double>> merged;
    for (const auto& pc : pieces) {
        if (!merged.empty() && merged.back().first == pc.first)
            merged.back().second += pc.second;
        else
            merged.push_back(pc);
    }
    while (!merged.empty() && merged.back().first == 0.0) merged.pop_back();

    std::vector<double> bps, vals;
    double acc = 0.0;
    for (const auto& [v, len] : merged) {
        acc += len;
        bps.push_back(acc);
        vals.push_back(v);
    }
    vals.push_back(0.0);
    return StepFn(std::move(bps), std::move(vals));
}

// Distribution function lambda -> |{t : f(t) > lambda}| as a StepFn in
// lambda (right-continuous, nonincreasing).  Computed from the rearrangement,
// whose canonical form makes this a pure relabeling: if f* takes the strictly
// decreasing values w_0 > ... > w_k = 0 on pieces ending at b_1 < ... < b_k,
// then mu_f equals b_{j} on [w_j, w_{j-1}).  Routing both f and f* through
// the same relabeling makes distribution(f) == distribution(rearrange(f))
// exact, not merely up to rounding.
inline StepFn distribution(const StepFn& f) {
    StepFn r = rearrange(f);
    if (r.is_zero()) return StepFn();
    const auto& b = r.breakpoints();
    const auto& w = r.values();
    const std::size_t k = b.size();
    std::vector<double> bps(k), vals(k + 1);
    for (std::size_t i = 0; i < k; ++i) {
        bps[i] = w[k - 1 - i];
        vals[i] = b[k - 1 - i];
    }
    vals[k] = 0.0;
    return StepFn(std::move(bps), std::move(vals));
}

// Exact integral of f*g over (0, inf) on the common refinement.
inline double inner_integral(const StepFn& f, const StepFn& g) {
    if (f.tail_value() * g.tail_value() > 0.0)
        return std::numeric_limits<double>::infinity();
    double acc = 0.0, prev = 0.0;
    const auto& fb = f.breakpoints();
    const auto& gb = g.breakpoints();
    std::size_t i = 0, j = 0;
    while (i < fb.size() || j < gb.size()) {
        double next;
        if (i < fb.size() && (j >= gb.size() || fb[i] <= gb[j])) next = fb[i];
        else next = gb[j];
        acc += f.values()[i] * g.values()[j] * (next - prev);
        while (i < fb.size() && fb[i] <= next) ++i;
        while (j < gb.size() && gb[j] <= next) ++j;
        prev = next;
    }
    return acc;
}

}  // namespace rinorms
