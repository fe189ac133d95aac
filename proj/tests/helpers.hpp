#pragma once

// Shared helpers for the test binaries.

#include <random>
#include <vector>

#include "localsyn/spatial.hpp"

namespace test_helpers {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

// FIR parameter with taps in [-1, 1], temporal length len
inline localsyn::ExtentVector random_fir(std::mt19937_64& g, int E, int len) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    localsyn::ExtentVector f(E);
    for (int k = -E; k <= E; ++k) {
        std::vector<double> c(static_cast<std::size_t>(len));
        for (auto& v : c) v = u(g);
        f.at(k) = localsyn::make_series(0, std::move(c));
    }
    return f;
}

// Laurent coefficients uniformly in [-1, 1] on powers lo..lo+len-1
inline localsyn::LaurentSeries random_series(std::mt19937_64& g, int lo, int len) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> c(static_cast<std::size_t>(len));
    for (auto& v : c) v = u(g);
    return localsyn::make_series(lo, std::move(c));
}

} // namespace test_helpers
