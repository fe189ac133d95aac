#pragma once

// Plant: an infinite chain of identical second-order subsystems.
//
// Site j carries states (x1, x2) with
//   x1[t+1] = beta*x1 + x2
//   x2[t+1] = (sigma x2)[j] + u + w^x,  sigma = alpha*(1 + kappa*(shift + shift^{-1}))
//   y = x1 + w^y
// with disturbance vector (w^y, w^x) and regulated output (x1, x2, u).
// After the spatial transform the chain
// diagonalizes into the one-parameter family of 2-state plants below, with
// sigma(theta) = alpha*(1 + 2*kappa*cos(theta)).

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "localsyn/spatial.hpp"

namespace localsyn {

struct PlantParams {
    double alpha = 1.5;
    double beta = 1.0;
    double kappa = 0.8;
};

// Frequency-domain realization at a fixed spatial frequency theta.
struct FrequencyPlant {
    double theta = 0.0;
    double sigma = 0.0;
    Eigen::Matrix2d A;
    Eigen::Matrix2d B1;
    Eigen::Vector2d B2;
    Eigen::Matrix<double, 3, 2> C1;
    Eigen::Matrix<double, 3, 2> D11;
    Eigen::Vector3d D12;
    Eigen::RowVector2d C2;
    Eigen::RowVector2d D21;
    double D22 = 0.0;
};

double sigma_at(const PlantParams& p, double theta);

// spatial kernel of the sigma operator: {alpha*kappa, alpha, alpha*kappa} at offsets -1, 0, +1
ExtentVector sigma_kernel(const PlantParams& p);

// apply the sigma operator in the index domain; widens extent by one
ExtentVector apply_sigma(const PlantParams& p, const ExtentVector& v);

FrequencyPlant build_freq_plant(const PlantParams& p, double theta);

// open-loop stability advisories (the synthesis itself does not require a stable plant)
std::vector<std::string> stability_notes(const PlantParams& p);

} // namespace localsyn
