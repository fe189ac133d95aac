#pragma once

// Input-output parameterization.
//
// Closed-loop maps (Gamma, Lambda, Psi, Omega) from disturbances injected at
// the measurement and input to measurement and input, in terms of the free
// scalar map lambda:
//   gamma = (z - beta)(z - sigma) lambda = omega
//   psi   = (z - beta)^2 (z - sigma)^2 lambda - (z - beta)(z - sigma)
// plus the derived second-state responses
//   x2_wy = (z - beta)(gamma - 1),   x2_wu = (z - beta) lambda.
// Causality forces the same decomposition lambda = z^-2 + z^-3 (sigma + beta)
// + z^-4 f as in the system-level form; the two assembled stacks coincide.

#include <complex>
#include <variant>

#include "localsyn/affine.hpp"
#include "localsyn/plant.hpp"

namespace localsyn {

struct IoFreqMaps {
    double theta = 0.0;
    double sigma = 0.0;
    LaurentSeries gamma, lambda, psi, omega;
    LaurentSeries x2_wy, x2_wu;
};

struct IoIndexMaps {
    ExtentVector gamma, lambda, psi, omega;
    ExtentVector x2_wy, x2_wu;
};

using IoMapSet = std::variant<IoFreqMaps, IoIndexMaps>;

IoFreqMaps io_freq_maps(const PlantParams& p, double theta, const LaurentSeries& lambda);
IoIndexMaps io_index_maps(const PlantParams& p, const ExtentVector& lambda);

// lambda from the FIR parameter f; same offset and shift as the r12 route
ExtentVector build_lambda(const PlantParams& p, const ExtentVector& f);

// raw blocks in lambda coordinates, order gamma, lambda, x2_wy, x2_wu, psi, omega
// (the -1 of gamma - 1 and omega - 1 is folded into the offsets)
AffineMapPair build_io_blocks(const PlantParams& p, int E);

// blocks composed onto f; causal by construction, internally checked
AffineMapPair assemble_io(const PlantParams& p, int E);

struct IoExtents {
    int Gamma, Lambda, Psi, Omega;
};
IoExtents io_extents(int E);

// controller value Psi Gamma^-1 at a sampled (theta, z)
std::complex<double> recover_controller_io(const PlantParams& p, std::complex<double> f_eval,
                                           double theta, std::complex<double> z);

} // namespace localsyn
