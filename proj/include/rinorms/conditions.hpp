#pragma once

// Decision procedures for the integral criteria: the Gamma/Lambda
// equivalence ratio, the L2-interpolation tail condition, the suffix-sup
// condition on fundamental functions (with its growth-cap companion), the
// four weighted product conditions for the down-dual pair, the dilation-norm
// sufficient integral, fundamental-index estimation, and the weight built
// from indicator norms.
//
// A criterion of the form LHS(t) <= C RHS(t) "for all t" is operationalized
// on a fixed log grid: the verdict is `holds` when the sup of the ratio is
// finite and adding the outermost decades moves it by less than 5%, `fails`
// when the ratio grows monotonically across at least three decades toward a
// boundary (or is infinite), and `inconclusive` otherwise.  Reports keep the
// raw grid so a reader can extend it.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "rinorms/norms.hpp"

namespace rinorms {

enum class Verdict { holds, fails, inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        default: return "inconclusive";
    }
}

struct CheckReport {
    std::string criterion;
    Verdict verdict = Verdict::inconclusive;
    double sup_ratio = std::numeric_limits<double>::quiet_NaN();
    double witness = std::numeric_limits<double>::quiet_NaN();
    std::string grid_desc;
    double error_bound = 0.0;
    std::vector<double> grid_t, grid_ratio;
    // Log-log growth diagnostic: slope of ln(ratio) against ln(ln(1/t)) over
    // the small-t end, when that end has enough finite points.
    double growth_slope = std::numeric_limits<double>::quiet_NaN();
    std::string note;
};

struct IndexEstimate {
    double lower = 0.0;
    double upper = 1.0;
    double fit_quality = 0.0;  // normalized RMS residual of the slope fits
};

namespace detail {

inline std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < n; ++i) g[i] = std::exp(llo + (lhi - llo) * i / (n - 1));
    return g;
}

inline std::pair<double, double> least_squares_slope(const std::vector<double>& xs,
                                                     const std::vector<double>& ys) {
    double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    double denom = n * sxx - sx * sx;
    double slope = (n * sxy - sx * sy) / denom;
    double icept = (sy - slope * sx) / n;
    double ss = 0, range = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double r = ys[i] - (icept + slope * xs[i]);
        ss += r * r;
    }
    double ymin = *std::min_element(ys.begin(), ys.end());
    double ymax = *std::max_element(ys.begin(), ys.end());
    range = std::max(ymax - ymin, 1e-12);
    return {slope, std::sqrt(ss / n) / range};
}

// Shared verdict logic over a (t, ratio) grid.
inline CheckReport finish_report(std::string criterion, std::vector<double> ts,
                                 std::vector<double> ratios, std::string grid_desc,
                                 double error_bound) {
    CheckReport rep;
    rep.criterion = std::move(criterion);
    rep.grid_desc = std::move(grid_desc);
    rep.error_bound = error_bound;
    rep.grid_t = std::move(ts);
    rep.grid_ratio = std::move(ratios);

    double sup = 0.0, witness = rep.grid_t.empty() ? 0.0 : rep.grid_t[0];
    bool any_inf = false;
    for (std::size_t i = 0; i < rep.grid_ratio.size(); ++i) {
        double r = rep.grid_ratio[i];
        if (std::isinf(r)) {
            any_inf = true;
            witness = rep.grid_t[i];
            break;
        }
        if (r > sup) {
            sup = r;
            witness = rep.grid_t[i];
        }
    }
    rep.witness = witness;

    // Growth diagnostic on the small-t side.
    {
        std::vector<double> xs, ys;
        for (std::size_t i = 0; i < rep.grid_t.size(); ++i) {
            double t = rep.grid_t[i], r = rep.grid_ratio[i];
            if (t <= 1e-2 && std::isfinite(r) && r > 0.0) {
                xs.push_back(std::log(std::log(1.0 / t)));
                ys.push_back(std::log(r));
            }
        }
        if (xs.size() >= 8) rep.growth_slope = least_squares_slope(xs, ys).first;
    }

    if (any_inf) {
        rep.verdict = Verdict::fails;
        rep.sup_ratio = std::numeric_limits<double>::infinity();
        return rep;
    }
    rep.sup_ratio = sup;
    if (sup == 0.0) {
        rep.verdict = Verdict::holds;
        return rep;
    }

    // Per-decade maxima ordered by decade of t.
    std::vector<std::pair<int, double>> decades;
    for (std::size_t i = 0; i < rep.grid_t.size(); ++i) {
        int d = static_cast<int>(std::floor(std::log10(rep.grid_t[i]) + 1e-9));
        if (!decades.empty() && decades.back().first == d)
            decades.back().second = std::max(decades.back().second, rep.grid_ratio[i]);
        else
            decades.emplace_back(d, rep.grid_ratio[i]);
    }

    auto rising_outward = [&](bool left_end) {
        const int need = 3;  // strictly increasing steps toward the boundary
        if (decades.size() < static_cast<std::size_t>(need + 1)) return false;
        for (int s = 0; s < need; ++s) {
            std::size_t i = left_end ? static_cast<std::size_t>(need - s)
                                     : decades.size() - 1 - static_cast<std::size_t>(need - s);
            std::size_t o = left_end ? i - 1 : i + 1;  // one decade further out
            if (!(decades[o].second > decades[i].second * 1.005)) return false;
        }
        return true;
    };
    if (rising_outward(true) || rising_outward(false)) {
        rep.verdict = Verdict::fails;
        return rep;
    }

    // Stability: the sup restricted to the interior decades must already be
    // within 5% of the full sup.
    if (decades.size() >= 3) {
        double interior = 0.0;
        for (std::size_t i = 1; i + 1 < decades.size(); ++i)
            interior = std::max(interior, decades[i].second);
        if (interior > 0.0 && sup <= interior * 1.05) {
            rep.verdict = Verdict::holds;
            return rep;
        }
        rep.verdict = Verdict::inconclusive;
        return rep;
    }
    rep.verdict = Verdict::holds;
    return rep;
}

// Ratio t^q tail_q(u, t) / int_0^t u over a log grid.
inline CheckReport weight_tail_ratio_check(std::string criterion, double q, const Weight& u,
                                           const QuadSpec& spec, double grid_lo, double grid_hi,
                                           int n) {
    std::vector<double> ts = log_grid(grid_lo, grid_hi, n);
    std::vector<double> ratios;
    ratios.reserve(ts.size());
    double errb = 0.0;
    for (double t : ts) {
        IntegralResult prim = primitive(u, t, spec);
        if (prim.divergent())
            throw std::domain_error(criterion + ": weight primitive diverges at the origin");
        IntegralResult tail = tail_p(u, t, q, spec);
        errb = std::max(errb, prim.error_bound + tail.error_bound);
        if (tail.divergent()) {
            ratios.push_back(std::numeric_limits<double>::infinity());
            continue;
        }
        ratios.push_back(std::pow(t, q) * tail.value / prim.value);
    }
    char desc[128];
    std::snprintf(desc, sizeof desc, "log grid, %d points on [%g, %g]", n, grid_lo, grid_hi);
    return finish_report(std::move(criterion), std::move(ts), std::move(ratios), desc, errb);
}

}  // namespace detail

// Does t^p int_t^inf u(s) s^{-p} ds <= C int_0^t u hold?  This is the
// criterion for the Gamma and Lambda norms against u to be equivalent.
inline CheckReport check_gamma_lambda_equivalence(double p, const Weight& u,
                                                  const QuadSpec& spec = {},
                                                  double grid_lo = 1e-8, double grid_hi = 1e8,
                                                  int n = 321) {
    return detail::weight_tail_ratio_check("gamma-lambda-equivalence", p, u, spec, grid_lo,
                                           grid_hi, n);
}

// Does t^{p/2} int_t^inf u(s) s^{-p/2} ds <= C int_0^t u hold?  Decides
// whether the Gamma space of order p against u interpolates between L2 and
// L-infinity.  A divergent tail is reported as `fails` (the criterion cannot
// hold), not as an error.
inline CheckReport check_l2_interpolation(double p, const Weight& u, const QuadSpec& spec = {},
                                          double grid_lo = 1e-8, double grid_hi = 1e8,
                                          int n = 321) {
    if (!(p >= 2.0)) throw std::invalid_argument("check_l2_interpolation: p >= 2 required");
    CheckReport rep =
        detail::weight_tail_ratio_check("l2-interpolation", p / 2.0, u, spec, grid_lo, grid_hi, n);
    if (!admissible(u, p / 2.0).convergent_at_infinity)
        rep.note = "half-exponent admissibility integral diverges";
    return rep;
}

struct SuffixSupReport {
    CheckReport main;       // sup_{s>=t} phi(s)^p / s <= C phi(t)^p / t
    CheckReport growth_cap; // phi(s)/phi(t) <= C (s/t)^{1/p} for s >= t
    IndexEstimate indices;
    bool indices_interior = true;
};

IndexEstimate estimate_indices(const NormSpec& spec, const QuadSpec& q = {});

// Suffix-sup condition on the fundamental function of Gamma(p, u), the
// index-based interpolation criterion, with the necessary growth cap as a
// companion report computed on the same grid.
inline SuffixSupReport check_fundamental_suffix_sup(double p, const Weight& u,
                                                    const QuadSpec& spec = {},
                                                    double grid_lo = 1e-8, double grid_hi = 1e8,
                                                    int n = 321) {
    if (!(p >= 2.0))
        throw std::invalid_argument("check_fundamental_suffix_sup: p >= 2 required");
    NormSpec g = NormSpec::gamma(p, u);
    std::vector<double> ts = detail::log_grid(grid_lo, grid_hi, n);
    std::vector<double> psi(ts.size()), psi_cap(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
        double phi = fundamental_function(g, ts[i], spec);
        psi[i] = std::pow(phi, p) / ts[i];
        psi_cap[i] = phi / std::pow(ts[i], 1.0 / p);
    }
    auto suffix_ratios = [&](const std::vector<double>& v) {
        std::vector<double> suffix(v.size());
        double m = 0.0;
        for (std::size_t i = v.size(); i-- > 0;) {
            m = std::max(m, v[i]);
            suffix[i] = m;
        }
        std::vector<double> r(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) r[i] = suffix[i] / v[i];
        return r;
    };
    char desc[128];
    std::snprintf(desc, sizeof desc, "log grid, %d points on [%g, %g], exact suffix maxima", n,
                  grid_lo, grid_hi);
    SuffixSupReport out;
    out.main = detail::finish_report("fundamental-suffix-sup", ts, suffix_ratios(psi), desc, 0.0);
    out.growth_cap =
        detail::finish_report("fundamental-growth-cap", ts, suffix_ratios(psi_cap), desc, 0.0);
    out.indices = estimate_indices(g, spec);
    out.indices_interior = out.indices.lower > 0.0 && out.indices.upper < 1.0;
    if (!out.indices_interior)
        out.main.note = "fundamental indices not strictly inside (0,1); criterion may not apply";
    return out;
}

struct DilationNorm {
    double value = 0.0;
    double argmax = 1.0;
    // Sup attained at the edge of the search grid: the estimate is a lower
    // bound only and the true sup is usually infinite.
    bool boundary = false;
};

namespace detail {

inline double gamma_bracket_p(const Weight& w, double p, double x, const QuadSpec& spec) {
    IntegralResult a = primitive(w, x, spec);
    IntegralResult b = tail_p(w, x, p, spec);
    if (a.divergent() || b.divergent()) return std::numeric_limits<double>::infinity();
    return a.value + std::pow(x, p) * b.value;
}

}  // namespace detail

// Norm of the dilation-by-t operator from Gamma(q, v) to Gamma(p, u_p):
// sup over s of the ratio of fundamental brackets, estimated on a 400-point
// log grid with golden-section refinement around the grid argmax.
inline DilationNorm dilation_norm_h(double q, const Weight& v, double p, const Weight& u_p,
                                    double t, const QuadSpec& spec = {}) {
    if (!(1.0 < q && q <= p))
        throw std::invalid_argument("dilation_norm_h: need 1 < q <= p");
    auto ratio_at = [&](double s) {
        double num = detail::gamma_bracket_p(u_p, p, s / t, spec);
        double den = detail::gamma_bracket_p(v, q, s, spec);
        if (std::isinf(num) || std::isinf(den))
            throw std::domain_error("dilation_norm_h: divergent bracket");
        return std::pow(num, 1.0 / p) / std::pow(den, 1.0 / q);
    };
    std::vector<double> ss = detail::log_grid(1e-10, 1e10, 400);
    double best = -1.0, sbest = 1.0;
    for (double s : ss) {
        double r = ratio_at(s);
        if (r > best) {
            best = r;
            sbest = s;
        }
    }
    // Golden-section refinement on log s around the grid argmax.
    double lo = std::log(sbest) - std::log(ss[1] / ss[0]);
    double hi = std::log(sbest) + std::log(ss[1] / ss[0]);
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi, x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = ratio_at(std::exp(x1)), f2 = ratio_at(std::exp(x2));
    for (int it = 0; it < 60; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = ratio_at(std::exp(x2));
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = ratio_at(std::exp(x1));
        }
    }
    double xm = 0.5 * (a + b);
    double fm = ratio_at(std::exp(xm));
    if (fm > best) {
        best = fm;
        sbest = std::exp(xm);
    }
    // Boundary flag only when the ratio genuinely rises toward the edge
    // (ties at a constant ratio park the argmax on the first grid point).
    bool boundary = false;
    if (sbest <= ss[1])
        boundary = ratio_at(ss[0]) > ratio_at(ss[5]) * (1.0 + 1e-9);
    else if (sbest >= ss[ss.size() - 2])
        boundary = ratio_at(ss.back()) > ratio_at(ss[ss.size() - 6]) * (1.0 + 1e-9);
    return {best, sbest, boundary};
}

struct DilationIntegralReport {
    Verdict verdict = Verdict::inconclusive;
    double integral = std::numeric_limits<double>::quiet_NaN();
    double fitted_exponent = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> decade_mass;
    std::string note;
};

// Sufficient condition int_1^inf h(t) dt/t < inf for the dilation norm
// between the pair; decided from per-decade masses of the integrand.
inline DilationIntegralReport check_dilation_integral(double q, const Weight& v, double p,
                                                      const Weight& u, const QuadSpec& spec = {},
                                                      int n_decades = 5) {
    Weight u_p = reflect_p(u, p);
    DilationIntegralReport rep;
    DilationNorm probe = dilation_norm_h(q, v, p, u_p, 1.0, spec);
    if (probe.boundary) {
        rep.verdict = Verdict::fails;
        rep.note = "dilation norm sup attained at the search boundary; treated as divergent";
        return rep;
    }
    // Fixed 8-point log sampling per decade, trapezoid in x = ln t; h is
    // smooth and monotone-ish so this resolves decade masses well.
    const int per = 8;
    for (int d = 0; d < n_decades; ++d) {
        double mass = 0.0;
        double x0 = d * std::log(10.0), x1 = (d + 1) * std::log(10.0);
        double prev = dilation_norm_h(q, v, p, u_p, std::exp(x0), spec).value;
        for (int j = 1; j <= per; ++j) {
            double x = x0 + (x1 - x0) * j / per;
            double cur = dilation_norm_h(q, v, p, u_p, std::exp(x), spec).value;
            mass += 0.5 * (prev + cur) * (x1 - x0) / per;
            prev = cur;
        }
        rep.decade_mass.push_back(mass);
    }
    std::vector<double> xs, ys;
    for (int d = 0; d < n_decades; ++d) {
        xs.push_back(d);
        if (rep.decade_mass[d] > 0.0) ys.push_back(std::log(rep.decade_mass[d]));
        else ys.push_back(-745.0);
    }
    rep.fitted_exponent = detail::least_squares_slope(xs, ys).first;

    bool nondecreasing = true;
    for (int d = 1; d < n_decades; ++d)
        if (rep.decade_mass[d] < rep.decade_mass[d - 1] * (1.0 - 1e-9)) nondecreasing = false;
    if (nondecreasing) {
        rep.verdict = Verdict::fails;
        return rep;
    }
    if (rep.fitted_exponent < -0.05) {
        rep.verdict = Verdict::holds;
        double sum = 0.0;
        for (double m : rep.decade_mass) sum += m;
        double r = std::exp(rep.fitted_exponent);
        rep.integral = sum + rep.decade_mass.back() * r / (1.0 - r);
        return rep;
    }
    rep.verdict = Verdict::inconclusive;
    return rep;
}

// Fundamental indices from k(s) = sup_t phi(t/s)/phi(t): least-squares slope
// of -ln k(s) against ln s on both wings.  For the families implemented here
// (Orlicz, Lorentz Gamma) these coincide with the dilation indices.
inline IndexEstimate estimate_indices(const NormSpec& spec, const QuadSpec& q) {
    std::vector<double> ts = detail::log_grid(1e-6, 1e6, 121);
    std::vector<double> phi(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) phi[i] = fundamental_function(spec, ts[i], q);

    auto k_of = [&](double s) {
        double m = 0.0;
        for (std::size_t i = 0; i < ts.size(); ++i) {
            double v = fundamental_function(spec, ts[i] / s, q) / phi[i];
            m = std::max(m, v);
        }
        return m;
    };

    std::vector<double> xs_lo, ys_lo, xs_hi, ys_hi;
    for (int i = 0; i < 9; ++i) {
        double s = std::pow(10.0, 2.0 + 0.5 * i);  // 1e2 .. 1e6
        xs_lo.push_back(std::log(s));
        ys_lo.push_back(-std::log(k_of(s)));
        double sm = std::pow(10.0, -6.0 + 0.5 * i);  // 1e-6 .. 1e-2
        xs_hi.push_back(std::log(sm));
        ys_hi.push_back(-std::log(k_of(sm)));
    }
    auto [lo_slope, lo_res] = detail::least_squares_slope(xs_lo, ys_lo);
    auto [hi_slope, hi_res] = detail::least_squares_slope(xs_hi, ys_hi);

    IndexEstimate est;
    double a = std::clamp(lo_slope, 0.0, 1.0);
    double b = std::clamp(hi_slope, 0.0, 1.0);
    est.lower = std::min(a, b);
    est.upper = std::max(a, b);
    est.fit_quality = std::max(lo_res, hi_res);
    return est;
}

struct WeightedPairReport {
    std::array<CheckReport, 4> conditions;
    CheckReport combined;
    std::string note;
};

namespace detail {

// int_0^x (ln(x/y))^p w(y) dy via quadrature; the log factor is folded into
// the origin envelope with ln(x/y) <= (|ln x| + 1) max(1, ln(1/y)) for
// y <= min(x, 1)/e.
inline IntegralResult log_kernel_primitive(const EvalFn& w, double x, double p,
                                           const QuadSpec& spec, bool shifted) {
    auto base = w;
    EvalFn g([base, x, p, shifted](double y) {
        double arg = shifted ? std::log1p(x / y) : (y < x ? std::log(x / y) : 0.0);
        return base(y) * std::pow(arg, p);
    });
    g.set_kinks(w.kinks());
    const auto& z = *w.envelope_zero();
    double lx = std::abs(std::log(x)) + 1.0 + (shifted ? std::log(2.0) : 0.0);
    g.set_envelope_zero({z.coef * std::pow(lx, p), z.growth, z.log_pow + p,
                         std::min({z.upto, x / std::exp(1.0), std::exp(-1.0)})});
    if (shifted) {
        // ln(1 + x/y) <= x/y for the tail side.
        const auto& ei = *w.envelope_inf();
        g.set_envelope_inf({ei.coef * std::pow(x, p), ei.decay + p, ei.log_pow, ei.from});
        return integrate_all(g, spec);
    }
    return integrate_from_zero(g, x, spec);
}

// int_x^inf w(y) (ln(y/x)/y)^{q} dy with ln(y/x) <= (|ln x| + 1) max(1, ln y)
// for y >= e.
inline IntegralResult log_kernel_tail(const EvalFn& w, double x, double q,
                                      const QuadSpec& spec) {
    auto base = w;
    EvalFn g([base, x, q](double y) {
        double arg = y > x ? std::log(y / x) : 0.0;
        return base(y) * std::pow(arg / y, q);
    });
    g.set_kinks(w.kinks());
    const auto& ei = *w.envelope_inf();
    double lx = std::abs(std::log(x)) + 1.0;
    g.set_envelope_inf({ei.coef * std::pow(lx, q), ei.decay + q, ei.log_pow + q,
                        std::max(ei.from, std::exp(1.0))});
    return integrate(g, x, std::numeric_limits<double>::infinity(), spec);
}

}  // namespace detail

// The four product conditions (plus the combined form) deciding the averaging
// inequality between the down-dual pair built from (u, v): reflect u to u_p,
// form the down-dual v', and test each product of a head integral against the
// matching tail integral on a log grid of x.
inline WeightedPairReport check_weighted_pair_conditions(double p, double q, const Weight& u,
                                                         const Weight& v,
                                                         const QuadSpec& spec = {},
                                                         double grid_lo = 1e-5,
                                                         double grid_hi = 1e5, int n = 81) {
    if (!(1.0 < q && q <= p))
        throw std::invalid_argument("check_weighted_pair_conditions: need 1 < q <= p");
    const double pp = p, qp = q / (q - 1.0);
    Weight u_p = reflect_p(u, p);
    WeightFn vd = down_dual(v, q, spec);  // throws when v has finite mass
    if (!has_infinite_mass(u_p))
        throw std::domain_error("check_weighted_pair_conditions: reflected weight has finite mass");

    EvalFn vde = vd.as_eval();
    EvalFn upe = to_eval(u_p);

    std::vector<double> xs = detail::log_grid(grid_lo, grid_hi, n);
    std::array<std::vector<double>, 4> cond;
    std::vector<double> comb;
    double errb = 0.0;
    for (double x : xs) {
        IntegralResult A = primitive(u_p, x, spec);
        IntegralResult T2 = tail_p(u_p, x, pp, spec);
        IntegralResult B = integrate_from_zero(vde, x, spec);
        IntegralResult T1 = tail_p(vd, x, qp, spec);
        IntegralResult L3 = detail::log_kernel_primitive(upe, x, pp, spec, false);
        IntegralResult L4 = detail::log_kernel_tail(vde, x, qp, spec);
        IntegralResult L13 = detail::log_kernel_primitive(upe, x, pp, spec, true);
        errb = std::max({errb, A.error_bound, T1.error_bound, B.error_bound, T2.error_bound,
                         L3.error_bound, L4.error_bound, L13.error_bound});
        auto prod = [](IntegralResult head, double pe, IntegralResult tail, double te) {
            if (head.divergent() || tail.divergent())
                return std::numeric_limits<double>::infinity();
            return std::pow(head.value, 1.0 / pe) * std::pow(tail.value, 1.0 / te);
        };
        cond[0].push_back(prod(A, pp, T1, qp));
        cond[1].push_back(prod(B, qp, T2, pp));
        cond[2].push_back(prod(L3, pp, T1, qp));
        cond[3].push_back(prod(A, pp, L4, qp));
        comb.push_back(prod(L13, pp, T1, qp));
    }
    char desc[128];
    std::snprintf(desc, sizeof desc, "log grid, %d points on [%g, %g]", n, grid_lo, grid_hi);
    static const char* names[4] = {"pair-product-plain", "pair-product-dual",
                                   "pair-product-logkernel", "pair-product-duallog"};
    WeightedPairReport out;
    for (int i = 0; i < 4; ++i)
        out.conditions[i] = detail::finish_report(names[i], xs, std::move(cond[i]), desc, errb);
    out.combined = detail::finish_report("pair-product-combined", xs, std::move(comb), desc, errb);
    return out;
}

struct FundamentalWeight {
    WeightFn weight;
    IndexEstimate indices;
    bool indices_interior = true;
};

// The weight phi(t)^p / t built from the indicator norms of `spec`; the
// Lambda and Gamma norms against it reproduce the original space when the
// fundamental indices are interior.
inline FundamentalWeight fundamental_weight(const NormSpec& spec, double p,
                                            const QuadSpec& q = {}) {
    if (!(p > 1.0)) throw std::invalid_argument("fundamental_weight: p > 1 required");
    FundamentalWeight out;
    out.indices = estimate_indices(spec, q);
    out.indices_interior = out.indices.lower > 0.0 && out.indices.upper < 1.0;

    auto eval = [spec, p, q](double t) {
        return std::pow(fundamental_function(spec, t, q), p) / t;
    };
    auto end_slope = [&](double t1, double t2) {
        return (std::log(eval(t2)) - std::log(eval(t1))) / (std::log(t2) - std::log(t1));
    };
    EndBehavior z{end_slope(1e-10, 1e-9), 0.0};
    EndBehavior i{end_slope(1e9, 1e10), 0.0};
    out.weight = detail::finish_weight_fn(eval, {}, z, i, std::nullopt);
    return out;
}

}  // namespace rinorms
