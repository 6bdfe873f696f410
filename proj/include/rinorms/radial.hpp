#pragma once

// Radial test functions built from concentric balls, their closed-form
// Fourier transforms through elementary half-integer Bessel kernels, and the
// numerical rearrangement of |f_hat| with certified window-tail bounds.
//
// Supported dimensions are 1 and 3, where the kernels are elementary:
//   n = 1:  ball transform  sin(2 pi r xi) / (pi xi)
//   n = 3:  4 pi r^3 (sin s - s cos s) / s^3,  s = 2 pi r xi.
// Both come with proven decay bounds of order xi^{-(n+1)/2} whose constants
// are explicit, so window truncation is certified rather than heuristic.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "rinorms/eval_fn.hpp"
#include "rinorms/step_fn.hpp"

namespace rinorms {

inline double unit_ball_volume(int dim) {
    switch (dim) {
        case 1: return 2.0;
        case 3: return 4.0 * std::numbers::pi / 3.0;
        default: throw std::invalid_argument("unsupported dimension (only 1 and 3)");
    }
}

// f(x) = sum_j c_j * chi_{B_{r_j}}(x): nonnegative and radially nonincreasing,
// which for the suffix sums S_j = sum_{i>=j} c_i means S_1 >= ... >= S_m >= 0.
class RadialStep {
public:
    RadialStep(int dim, std::vector<double> radii, std::vector<double> coeffs)
        : dim_(dim), radii_(std::move(radii)), coeffs_(std::move(coeffs)) {
        unit_ball_volume(dim_);  // dimension check
        if (radii_.empty() || radii_.size() != coeffs_.size())
            throw std::invalid_argument("RadialStep: radii/coeffs size mismatch");
        double prev = 0.0;
        for (double r : radii_) {
            if (!(r > prev) || !std::isfinite(r))
                throw std::invalid_argument("RadialStep: radii must be positive and increasing");
            prev = r;
        }
        double suffix = 0.0;
        std::vector<double> s(coeffs_.size());
        for (std::size_t j = coeffs_.size(); j-- > 0;) {
            suffix += coeffs_[j];
            s[j] = suffix;
        }
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (!(s[j] >= 0.0))
                throw std::invalid_argument("RadialStep: negative shell value");
            if (j > 0 && s[j] > s[j - 1] + 1e-15 * std::abs(s[j]))
                throw std::invalid_argument("RadialStep: shell values must be nonincreasing");
        }
        shell_values_ = std::move(s);
    }

    int dim() const { return dim_; }
    const std::vector<double>& radii() const { return radii_; }
    const std::vector<double>& coeffs() const { return coeffs_; }
    const std::vector<double>& shell_values() const { return shell_values_; }

    double integral() const {
        double nu = unit_ball_volume(dim_);
        double s = 0.0;
        for (std::size_t j = 0; j < radii_.size(); ++j)
            s += coeffs_[j] * nu * std::pow(radii_[j], dim_);
        return s;
    }

    RadialStep scaled(double c) const {
        if (!(c >= 0.0)) throw std::invalid_argument("RadialStep::scaled: negative factor");
        std::vector<double> cc(coeffs_);
        for (double& x : cc) x *= c;
        return RadialStep(dim_, radii_, std::move(cc));
    }

    // Spatial dilation f(lambda x): radii scale by 1/lambda.
    RadialStep dilated(double lambda) const {
        if (!(lambda > 0.0)) throw std::invalid_argument("RadialStep::dilated: lambda > 0");
        std::vector<double> rr(radii_);
        for (double& r : rr) r /= lambda;
        return RadialStep(dim_, std::move(rr), coeffs_);
    }

private:
    int dim_;
    std::vector<double> radii_;
    std::vector<double> coeffs_;
    std::vector<double> shell_values_;
};

// Exact rearrangement: f*(t) = g((t/nu_n)^{1/n}) for f(x) = g(|x|), a StepFn
// with breakpoints at the ball volumes.
inline StepFn radial_rearrange(const RadialStep& f) {
    double nu = unit_ball_volume(f.dim());
    std::vector<double> bps, vals;
    for (std::size_t j = 0; j < f.radii().size(); ++j) {
        bps.push_back(nu * std::pow(f.radii()[j], f.dim()));
        vals.push_back(f.shell_values()[j]);
    }
    vals.push_back(0.0);
    return StepFn(std::move(bps), std::move(vals));
}

namespace detail {

// sin(s)/s with a series switch below 1e-4.
inline double sinc_kernel(double s) {
    if (std::abs(s) < 1e-4) {
        double s2 = s * s;
        return 1.0 - s2 / 6.0 + s2 * s2 / 120.0;
    }
    return std::sin(s) / s;
}

// (sin s - s cos s) / s^3 with a series switch below 1e-4; value 1/3 at 0.
inline double ball3_kernel(double s) {
    if (std::abs(s) < 1e-4) {
        double s2 = s * s;
        return 1.0 / 3.0 - s2 / 30.0 + s2 * s2 / 840.0;
    }
    return (std::sin(s) - s * std::cos(s)) / (s * s * s);
}

}  // namespace detail

// Normalized spherical transform kernel of the unit ball: the transform of
// chi_{B_r} at radial frequency xi is nu_n r^n * ball_kernel(dim, 2 pi r xi).
inline double ball_kernel(int dim, double s) {
    switch (dim) {
        case 1: return detail::sinc_kernel(s);
        case 3: return 3.0 * detail::ball3_kernel(s);
        default: throw std::invalid_argument("unsupported dimension (only 1 and 3)");
    }
}

struct TransformProfile {
    int dim = 1;
    std::function<double(double)> eval;  // signed value of f_hat along a ray
    double at_zero = 0.0;                // f_hat(0) = integral of f
    EnvelopeAtInf envelope;              // |f_hat(xi)| <= coef * xi^{-(n+1)/2}, xi >= from
    double max_radius = 1.0;

    double abs(double xi) const { return std::abs(eval(xi)); }
};

// Closed-form transform of a RadialStep.
inline TransformProfile transform(const RadialStep& f) {
    const int n = f.dim();
    const double nu = unit_ball_volume(n);
    const auto radii = f.radii();
    const auto coeffs = f.coeffs();
    TransformProfile out;
    out.dim = n;
    out.at_zero = f.integral();
    out.max_radius = radii.back();
    out.eval = [n, nu, radii, coeffs](double xi) {
        double s = 0.0;
        for (std::size_t j = 0; j < radii.size(); ++j)
            s += coeffs[j] * nu * std::pow(radii[j], n) *
                 ball_kernel(n, 2.0 * std::numbers::pi * radii[j] * xi);
        return s;
    };
    double abs_sum = 0.0, abs_r_sum = 0.0;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        abs_sum += std::abs(coeffs[j]);
        abs_r_sum += std::abs(coeffs[j]) * radii[j];
    }
    if (n == 1) {
        // |sum c_j sin(2 pi r_j xi)/(pi xi)| <= sum |c_j| / (pi xi), all xi.
        out.envelope = {abs_sum / std::numbers::pi, 1.0, 0.0, 0.0};
    } else {
        // |sin s - s cos s| <= 1 + s <= 2s for s >= 1 gives
        // |f_hat| <= (2/pi) sum |c_j| r_j xi^{-2} once 2 pi r_min xi >= 1.
        out.envelope = {2.0 * abs_r_sum / std::numbers::pi, 2.0, 0.0,
                        1.0 / (2.0 * std::numbers::pi * f.radii().front())};
    }
    return out;
}

struct RearrangedTransform {
    StepFn rearranged;   // rearrangement of |f_hat| restricted to |xi| <= window
    double window = 0.0;
    int samples = 0;
    double value_cut = 0.0;  // sup bound for |f_hat| beyond the window
    double l2_tail = 0.0;    // certified bound on int_{|xi|>window} |f_hat|^2
};

// Sampled rearrangement of |f_hat|: values on a log+linear radial grid up to
// the window, shell measures between sample midpoints, sorted and
// accumulated.  The omitted outer mass is certified by the decay envelope.
inline RearrangedTransform rearrange_transform(const TransformProfile& F, double window = 0.0,
                                               int n_samples = 1 << 16,
                                               double max_l2_tail =
                                                   std::numeric_limits<double>::infinity()) {
    RearrangedTransform out;
    if (window <= 0.0) window = 1e3 / F.max_radius;
    if (!(F.envelope.decay > (F.dim + 1) / 2.0 - 1e-9) || F.envelope.coef <= 0.0)
        throw std::invalid_argument("rearrange_transform: transform lacks a decay envelope");
    if (window < F.envelope.from)
        throw std::invalid_argument("rearrange_transform: window below envelope validity");

    const double pi = std::numbers::pi;
    double C = F.envelope.coef;
    out.l2_tail = (F.dim == 1) ? 2.0 * C * C / window : 4.0 * pi * C * C / window;
    out.value_cut = F.envelope.bound(window);
    if (out.l2_tail > max_l2_tail) {
        double suggested = window * out.l2_tail / max_l2_tail;
        throw std::invalid_argument(
            "rearrange_transform: envelope too weak for the requested accuracy; "
            "suggested window >= " + std::to_string(suggested));
    }

    // Sample grid: a quarter of the points log-spaced below window/100, the
    // rest linear up to the window.
    std::vector<double> grid;
    grid.reserve(n_samples);
    int n_log = n_samples / 4;
    double lo = window * 1e-8, mid = window * 1e-2;
    for (int i = 0; i < n_log; ++i)
        grid.push_back(std::exp(std::log(lo) + (std::log(mid) - std::log(lo)) * i / (n_log - 1)));
    int n_lin = n_samples - n_log;
    for (int i = 1; i <= n_lin; ++i) grid.push_back(mid + (window - mid) * i / n_lin);

    auto shell_measure = [&](double a, double b) {
        if (F.dim == 1) return 2.0 * (b - a);
        return 4.0 * pi / 3.0 * (b * b * b - a * a * a);
    };

    std::vector<std::pair<double, double>> cells;  // (|f_hat| at sample, shell measure)
    cells.reserve(grid.size());
    double prev_edge = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double hi = (i + 1 < grid.size()) ? 0.5 * (grid[i] + grid[i + 1]) : window;
        cells.emplace_back(F.abs(grid[i]), shell_measure(prev_edge, hi));
        prev_edge = hi;
    }
    std::stable_sort(cells.begin(), cells.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<double> bps, vals;
    bps.reserve(cells.size());
    vals.reserve(cells.size() + 1);
    double acc = 0.0;
    for (const auto& [v, m] : cells) {
        if (v <= 0.0) break;
        acc += m;
        if (!bps.empty() && vals.back() == v) {
            bps.back() = acc;
            continue;
        }
        bps.push_back(acc);
        vals.push_back(v);
    }
    vals.push_back(0.0);
    out.rearranged = StepFn(std::move(bps), std::move(vals));
    out.window = window;
    out.samples = n_samples;
    return out;
}

}  // namespace rinorms
