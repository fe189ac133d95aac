#pragma once

// Spatial impulse-response vectors over the infinite chain.
//
// An ExtentVector collects one Laurent series per spatial offset
// k = -extent .. extent.  It represents a spatially invariant map through
// its kernel: the map sends site j to site j+k with transfer entry(k).
// The declared extent is a storage bound; measured_extent reports the
// largest offset actually populated.

#include <stdexcept>
#include <vector>

#include "localsyn/series.hpp"

namespace localsyn {

struct ExtentVector {
    int extent = 0;
    std::vector<LaurentSeries> entry;  // entry[k + extent] holds offset k

    ExtentVector() : entry(1) {}
    explicit ExtentVector(int E) : extent(E), entry(std::size_t(2 * E + 1)) {}

    const LaurentSeries& at(int k) const { return entry[std::size_t(k + extent)]; }
    LaurentSeries& at(int k) { return entry[std::size_t(k + extent)]; }
    bool in_range(int k) const { return k >= -extent && k <= extent; }
};

ExtentVector vec_pad(const ExtentVector& v, int E);
ExtentVector vec_add(const ExtentVector& a, const ExtentVector& b);
ExtentVector vec_sub(const ExtentVector& a, const ExtentVector& b);
ExtentVector vec_scale(const ExtentVector& a, double k);

// entrywise product with a scalar series (no spatial widening)
ExtentVector vec_mul_series(const ExtentVector& a, const LaurentSeries& s);

// largest |k| with a nonempty entry after trimming; 0 for the zero vector
int measured_extent(const ExtentVector& v);

// root sum of squared coefficients over all offsets and delays
double h2_norm(const ExtentVector& v);

// spatial transform at frequency theta: sum_k entry(k) e^{-i k theta}
SpectralSeries spatial_eval(const ExtentVector& v, double theta);

// Parseval evaluation of h2_norm on a uniform theta grid.  Exact (up to
// rounding) once grid >= 2*extent + 2; smaller grids are rejected.
double h2_norm_freq(const ExtentVector& v, int grid);

// worst causality violation over all offsets
CausalCheck causal_check(const ExtentVector& v, double tol, bool strict = false);

} // namespace localsyn
