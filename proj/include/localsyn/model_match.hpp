#pragma once

// Unconstrained model matching: minimize the H2 norm of the assembled
// affine stack over FIR parameters f of spatial extent E and temporal
// length T+1.  The stack is linear in the taps of f, so the optimum is a
// dense least-squares problem, solved by Householder QR.  A single scalar
// instance of the same problem at a fixed spatial frequency provides the
// per-theta kernel used by the grid oracle.

#include <optional>
#include <string>
#include <vector>

#include "localsyn/io_maps.hpp"
#include "localsyn/sl_maps.hpp"

namespace localsyn {

enum class Param { sl, io, both };

Param param_from_string(const std::string& s);
std::string to_string(Param p);

struct SolverConfig {
    int horizon_T = 60;       // FIR length minus one for the parameter taps
    int theta_grid = 512;     // grid for the Parseval cross-check
    double normal_eq_tol = 1e-9;    // bound on ||A^T (A x + b)|| at the solution
    double convergence_rtol = 1e-8; // SL vs IO agreement requirement
};

struct SynthesisResult {
    int E = 0;
    int T = 0;
    Param which = Param::sl;
    ExtentVector f;           // optimal FIR parameter, causal taps of length <= T+1
    double J = 0.0;           // achieved cost, time domain
    double J_freq_check = 0.0;    // same cost recomputed on the theta grid
    double residual_gradient_norm = 0.0;
    SlIndexMaps maps_sl;      // closed-loop maps at the solution
};

// solve for the given parameterization (Param::both is rejected here)
SynthesisResult solve_finite_extent(const PlantParams& p, int E, const SolverConfig& cfg,
                                    Param which);

// exact cost of an arbitrary FIR parameter (no horizon truncation)
double cost_of(const PlantParams& p, const ExtentVector& f, const SolverConfig& cfg, Param which);

// single-frequency instance; cost_sq is the squared optimal cost at theta
struct ScalarSolve {
    double cost_sq = 0.0;
    double grad_norm = 0.0;
};
ScalarSolve solve_theta(const PlantParams& p, double theta, int T, double normal_eq_tol = 1e-9);

struct SweepRow {
    int E = 0;
    double J_sl = 0.0;
    double J_io = 0.0;
    double gap_sl = 0.0;   // J_sl - j_inf when an oracle value is supplied
    double gap_io = 0.0;
    int T_used = 0;
    double residual_grad = 0.0;
    std::string status = "ok";
};

// one row per requested extent; rows are computed independently and failures
// are recorded in the row status instead of aborting the sweep
std::vector<SweepRow> sweep(const PlantParams& p, const std::vector<int>& E_list,
                            const SolverConfig& cfg, Param which,
                            std::optional<double> j_inf = std::nullopt);

struct HorizonRow {
    int T = 0;
    double J = 0.0;
    double rel_change = 0.0;  // |J - J_prev| / J, zero for the first row
};

std::vector<HorizonRow> horizon_convergence(const PlantParams& p, int E,
                                            const std::vector<int>& T_list,
                                            const SolverConfig& cfg, Param which);

} // namespace localsyn
