#pragma once

// Grid oracle for the unconstrained optimum J_inf.
//
// With no locality constraint the synthesis decouples across spatial
// frequency: at each theta the optimal cost is a scalar FIR model-matching
// problem, and J_inf^2 is the average of the squared per-theta costs over
// [0, 2pi).  The integrand is smooth and periodic, so the trapezoid rule
// (uniform grid average) converges spectrally.

#include <vector>

#include "localsyn/model_match.hpp"
#include "localsyn/plant.hpp"

namespace localsyn {

struct OracleConfig {
    int theta_points = 512;
    int oracle_T = 240;   // keep at >= 4x the sweep horizon
};

// squared optimal cost at one frequency
double per_theta_cost(const PlantParams& p, double theta, const OracleConfig& cfg);

// squared optimal cost at theta_i = 2 pi i / theta_points for every grid point
std::vector<double> per_theta_profile(const PlantParams& p, const OracleConfig& cfg);

double j_inf(const PlantParams& p, const OracleConfig& cfg);

} // namespace localsyn
