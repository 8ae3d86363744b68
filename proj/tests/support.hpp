#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "comono/filtration.hpp"
#include "comono/point.hpp"

namespace comono::testing {

inline Point2 uniform_point(std::mt19937_64& rng, double half_width) {
    std::uniform_real_distribution<double> d(-half_width, half_width);
    return {d(rng), d(rng)};
}

/// Random direction scaled so its gauge is log-uniform in [lo, hi].
inline Point2 log_uniform_gauge_point(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> logr(std::log(lo), std::log(hi));
    Point2 dir{0, 0};
    while (dir.x == 0.0 && dir.y == 0.0) dir = {unit(rng), unit(rng)};
    // Independent of the closed form on purpose: scale through the |x|/4 and |y-3x/4| faces.
    const double g = std::fmax(std::fabs(dir.x) / 4.0, std::fabs(dir.y - 0.75 * dir.x));
    return dir * (std::exp(logr(rng)) / g);
}

/// Model with `n` atoms, Dirichlet-like weights and payoffs of log-uniform gauge.
inline FiltrationModel random_model(std::mt19937_64& rng, std::size_t n, double lo = 1e-3, double hi = 1e6) {
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> w(n);
    double total = 0.0;
    for (auto& v : w) total += (v = expo(rng) + 1e-3);
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i < n; ++i) {
        atoms.push_back({"atom" + std::to_string(i), w[i] / total, log_uniform_gauge_point(rng, lo, hi)});
    }
    // Push the rounding residue into the last weight so the sum is 1 to ~1 ulp.
    double partial = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) partial += atoms[i].weight;
    if (n > 1) atoms.back().weight = 1.0 - partial;
    return FiltrationModel(std::move(atoms));
}

}  // namespace comono::testing
