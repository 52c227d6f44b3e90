#pragma once

// Shared helpers for the unit tests: sampled test functions and a seeded
// generator of random real-valued grid data.

#include "biharm/grid.hpp"

#include <cmath>
#include <numbers>
#include <cstdint>
#include <random>

namespace testing {

inline biharm::GridFunction cosine(const biharm::GridSpec& spec, double xi0 = 1.0) {
    return biharm::GridFunction::sample(spec, [xi0](const biharm::Point& x) { return std::cos(xi0 * x[0]); });
}

// Band-limited random data: modes up to `modes` with decaying amplitudes, so
// operators of moderate order stay well conditioned.
inline biharm::GridFunction random_smooth(const biharm::GridSpec& spec, std::uint64_t seed, int modes = 6,
                                          bool zero_mean = true) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
    const double dk = spec.frequency_step();
    std::vector<double> v(spec.size(), zero_mean ? 0.0 : 0.3);
    for (int a = 0; a <= modes; ++a)
        for (int b = spec.dim() == 2 ? -modes : 0; b <= (spec.dim() == 2 ? modes : 0); ++b) {
            if (a == 0 && b <= 0) continue;
            const double amp = 1.0 / (1.0 + a * a + b * b), phase = u(rng);
            for (std::size_t i = 0; i < v.size(); ++i) {
                const biharm::Point x = spec.coordinate(i);
                v[i] += amp * std::cos(dk * (a * x[0] + b * x[1]) + phase);
            }
        }
    return biharm::GridFunction(spec, std::move(v));
}

inline double rel_sup(const biharm::GridFunction& a, const biharm::GridFunction& b) {
    return biharm::sup_norm(a - b) / biharm::sup_norm(b);
}

} // namespace testing
