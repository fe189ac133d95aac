#pragma once

// Affine parameterization blocks.
//
// Each closed-loop map is affine in the free parameter: map = V*x + h,
// where x is a spatial vector (the r12 / lambda kernel, later the FIR
// parameter f), V is a banded spatially invariant (Toeplitz) operator
// whose band entries are Laurent series, and h is a fixed offset vector.
// A MapBlock stores one such map; an AffineMapPair stacks the six blocks
// of a parameterization in a fixed order.

#include <string>
#include <vector>

#include "localsyn/spatial.hpp"

namespace localsyn {

struct MapBlock {
    std::string name;
    int in_extent = 0;   // spatial extent of the input coordinate vector
    int out_extent = 0;  // declared output extent (row offsets -out..out)
    int bandwidth = 0;   // band offsets -bandwidth .. bandwidth
    std::vector<LaurentSeries> band;  // band[d + bandwidth] is the entry at row-col offset d
    ExtentVector h;      // offset part, extent == out_extent

    const LaurentSeries& band_at(int d) const { return band[std::size_t(d + bandwidth)]; }
};

struct AffineMapPair {
    int input_extent = 0;
    std::vector<MapBlock> blocks;
};

// Toeplitz band entry at (row r, col c); zero outside the band.
LaurentSeries toeplitz_entry(const MapBlock& b, int r, int c);

// y_r = sum_c band[r-c] * x_c + h_r over rows r = -out_extent .. out_extent
ExtentVector apply_block(const MapBlock& b, const ExtentVector& x);

// total scalar rows: sum over blocks of (2*out_extent + 1)
int stack_rows(const AffineMapPair& p);

// worst causality violation over all band entries and offsets of all blocks
CausalCheck causal_check(const AffineMapPair& p, double tol);

} // namespace localsyn
