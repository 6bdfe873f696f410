#pragma once

// Seeded generators for test batteries.  Uniform deviates are derived from
// the raw mt19937_64 stream (not std distributions), so identical seeds give
// identical batteries on every platform and every standard library.

#include <cmath>
#include <cstdint>
#include <random>

#include "rinorms/radial.hpp"
#include "rinorms/step_fn.hpp"

namespace rinorms {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    double log_uniform(double a, double b) {
        return std::exp(uniform(std::log(a), std::log(b)));
    }
    int uniform_int(int a, int b) {  // inclusive
        return a + static_cast<int>(uniform() * (b - a + 1.0)) % (b - a + 1);
    }

private:
    std::mt19937_64 eng_;
};

// Random StepFn with up to max_pieces pieces, vanishing at infinity; about
// one value in seven is an interior zero so plateaus and gaps both occur.
inline StepFn random_step_fn(Rng& rng, int max_pieces = 20) {
    int n = rng.uniform_int(1, max_pieces);
    std::vector<double> bps(n);
    for (double& b : bps) b = rng.log_uniform(1e-3, 1e3);
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
    std::vector<double> vals(bps.size() + 1);
    for (std::size_t i = 0; i < bps.size(); ++i)
        vals[i] = rng.uniform() < 0.15 ? 0.0 : rng.uniform(0.0, 10.0);
    vals.back() = 0.0;
    return StepFn(std::move(bps), std::move(vals));
}

inline RadialStep random_radial(Rng& rng, int dim, int max_balls = 4) {
    int m = rng.uniform_int(1, max_balls);
    std::vector<double> radii(m);
    for (double& r : radii) r = rng.log_uniform(0.1, 10.0);
    std::sort(radii.begin(), radii.end());
    radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
    std::vector<double> coeffs(radii.size());
    for (double& c : coeffs) c = rng.uniform(0.05, 2.0);
    return RadialStep(dim, std::move(radii), std::move(coeffs));
}

}  // namespace rinorms
