#pragma once

// System-level parameterization.
//
// Closed-loop maps (R, M, N, L) from disturbances to state and input,
// written in terms of the single free scalar map r12:
//   r11 = (z - sigma) r12          m1 = (z - sigma)^2 (z - beta) r12 - (z - sigma)
//   r21 = (z - sigma)(z - beta) r12 - 1 = n1 = m2
//   r22 = (z - beta) r12           n2 = (z - sigma)(z - beta)^2 r12 - (z - beta)
//   l   = (z - sigma)^2 (z - beta)^2 r12 - (z - sigma)(z - beta)
// Causality of the full set forces r12 = z^-2 + z^-3 (sigma + beta) + z^-4 f
// with f free, causal and FIR here; f of spatial extent E yields the locality
// profile reported by sl_extents.

#include <complex>
#include <variant>

#include "localsyn/affine.hpp"
#include "localsyn/plant.hpp"

namespace localsyn {

// fixed spatial frequency: nine scalar transfer series
struct SlFreqMaps {
    double theta = 0.0;
    double sigma = 0.0;
    LaurentSeries r11, r12, r21, r22;
    LaurentSeries m1, m2;
    LaurentSeries n1, n2;
    LaurentSeries l;
};

// index domain: nine spatial kernels
struct SlIndexMaps {
    ExtentVector r11, r12, r21, r22;
    ExtentVector m1, m2;
    ExtentVector n1, n2;
    ExtentVector l;
};

using SlMapSet = std::variant<SlFreqMaps, SlIndexMaps>;

SlFreqMaps sl_freq_maps(const PlantParams& p, double theta, const LaurentSeries& r12);
SlIndexMaps sl_index_maps(const PlantParams& p, const ExtentVector& r12);

// r12 from a causal FIR parameter f of extent E: the fixed offset
// z^-2 + z^-3 (sigma + beta) plus z^-4 f, declared extent E+1
ExtentVector build_r12(const PlantParams& p, const ExtentVector& f);

// the model-matching offset alone (content extent 1, padded to E+1)
ExtentVector r12_offset(const PlantParams& p, int E);

// raw appendix blocks in r12 coordinates, order n1, r12, n2, r22, l, m2
AffineMapPair build_sl_blocks(const PlantParams& p, int E);

// blocks composed onto the free parameter f (input extent E); every entry
// of the result is causal, enforced by an internal check
AffineMapPair assemble_sl(const PlantParams& p, int E);

struct SlExtents {
    int R, M, N, L;
};
SlExtents sl_extents(int E);

// controller value L - M R^-1 N at a sampled (theta, z), where f_eval is the
// value of the transformed parameter f at that sample
std::complex<double> recover_controller_sl(const PlantParams& p, std::complex<double> f_eval,
                                           double theta, std::complex<double> z);

// the closed-form controller both parameterizations reduce to
std::complex<double> explicit_controller(const PlantParams& p, std::complex<double> f_eval,
                                         double theta, std::complex<double> z);

} // namespace localsyn
