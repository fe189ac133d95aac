#include "localsyn/model_match.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Dense>

#include "localsyn/errors.hpp"
#include "localsyn/parallel.hpp"

namespace localsyn {

Param param_from_string(const std::string& s) {
    if (s == "sl") return Param::sl;
    if (s == "io") return Param::io;
    if (s == "both") return Param::both;
    throw ConfigError("unknown parameterization '" + s + "' (expected sl, io or both)");
}

std::string to_string(Param p) {
    switch (p) {
        case Param::sl: return "sl";
        case Param::io: return "io";
        default: return "both";
    }
}

namespace {

void validate(const SolverConfig& cfg) {
    if (cfg.horizon_T < 1) throw ConfigError("solver: horizon_T must be >= 1");
    if (cfg.theta_grid < 64) throw ConfigError("solver: theta_grid must be >= 64");
    if (cfg.normal_eq_tol <= 0.0) throw ConfigError("solver: normal_eq_tol must be positive");
    if (cfg.convergence_rtol <= 0.0) throw ConfigError("solver: convergence_rtol must be positive");
}

// Dense least-squares instance  min_x || A x + b ||  for an assembled pair.
// Unknowns are the taps x(k, tau), k = -E..E, tau = 0..T.  Rows run over
// (block, spatial offset, time); the time span covers every coefficient the
// band entries or offsets can reach, so the squared residual equals the
// squared H2 norm of the stack exactly.
struct LsProblem {
    Eigen::MatrixXd A;
    Eigen::VectorXd b;
    int E = 0;
    int T = 0;
};

LsProblem build_problem(const AffineMapPair& pair, int T) {
    const int E = pair.input_extent;
    const int ncols = (2 * E + 1) * (T + 1);

    int band_reach = 0, h_reach = 0;
    for (const auto& blk : pair.blocks) {
        for (const auto& e : blk.band) {
            if (e.empty()) continue;
            if (e.lowest_power() < 0)
                throw InternalError("build_problem: acausal band entry in block " + blk.name);
            band_reach = std::max(band_reach, e.highest_power());
        }
        for (const auto& e : blk.h.entry) {
            if (e.empty()) continue;
            if (e.lowest_power() < 0)
                throw InternalError("build_problem: acausal offset entry in block " + blk.name);
            h_reach = std::max(h_reach, e.highest_power());
        }
    }
    const int nt = std::max(band_reach + T, h_reach) + 1;  // time samples per spatial row

    int nrows = 0;
    std::vector<int> row_base;
    row_base.reserve(pair.blocks.size());
    for (const auto& blk : pair.blocks) {
        row_base.push_back(nrows);
        nrows += (2 * blk.out_extent + 1) * nt;
    }

    LsProblem prob;
    prob.E = E;
    prob.T = T;
    prob.A = Eigen::MatrixXd::Zero(nrows, ncols);
    prob.b = Eigen::VectorXd::Zero(nrows);

    for (std::size_t bi = 0; bi < pair.blocks.size(); ++bi) {
        const MapBlock& blk = pair.blocks[bi];
        const auto row_of = [&](int r, int t) {
            return row_base[bi] + (r + blk.out_extent) * nt + t;
        };
        for (int r = -blk.out_extent; r <= blk.out_extent; ++r) {
            const LaurentSeries& h = blk.h.at(r);
            for (std::size_t i = 0; i < h.c.size(); ++i)
                prob.b(row_of(r, h.lo + int(i))) = h.c[i];
        }
        for (int k = -E; k <= E; ++k) {
            for (int d = -blk.bandwidth; d <= blk.bandwidth; ++d) {
                const int r = k + d;
                if (r < -blk.out_extent || r > blk.out_extent) continue;
                const LaurentSeries& e = blk.band_at(d);
                for (std::size_t i = 0; i < e.c.size(); ++i) {
                    const int p = e.lo + int(i);
                    for (int tau = 0; tau <= T; ++tau)
                        prob.A(row_of(r, p + tau), (k + E) * (T + 1) + tau) += e.c[i];
                }
            }
        }
    }
    return prob;
}

struct LsSolution {
    Eigen::VectorXd x;
    double J = 0.0;
    double grad_norm = 0.0;
};

LsSolution solve_problem(const LsProblem& prob, double normal_eq_tol) {
    const Eigen::HouseholderQR<Eigen::MatrixXd> qr(prob.A);
    const int n = int(prob.A.cols());
    const Eigen::VectorXd rdiag = qr.matrixQR().diagonal().head(n).cwiseAbs();
    const double rmax = rdiag.maxCoeff();
    if (rmax <= 0.0 || rdiag.minCoeff() / rmax < 1e-12)
        throw NumericalError("least squares: design matrix is rank deficient");

    LsSolution sol;
    sol.x = qr.solve(-prob.b);
    const Eigen::VectorXd resid = prob.A * sol.x + prob.b;
    sol.J = resid.norm();
    sol.grad_norm = (prob.A.transpose() * resid).norm();
    if (sol.grad_norm > normal_eq_tol)
        throw NumericalError("least squares: normal equations residual " +
                             std::to_string(sol.grad_norm) + " exceeds tolerance");
    return sol;
}

ExtentVector taps_to_vector(const Eigen::VectorXd& x, int E, int T) {
    ExtentVector f(E);
    for (int k = -E; k <= E; ++k) {
        std::vector<double> taps(std::size_t(T + 1));
        for (int tau = 0; tau <= T; ++tau) taps[std::size_t(tau)] = x((k + E) * (T + 1) + tau);
        f.at(k) = make_series(0, std::move(taps));
    }
    return f;
}

SpectralSeries to_spectral(const LaurentSeries& s) {
    std::vector<std::complex<double>> c(s.c.begin(), s.c.end());
    return {s.lo, std::move(c)};
}

// squared cost of the six-map stack at one frequency, given the transformed
// parameter f_hat
double stack_cost_sq_at(const PlantParams& p, double theta, const SpectralSeries& f_hat) {
    const double sg = sigma_at(p, theta);
    const SpectralSeries lam = series_add(
        to_spectral(make_series(2, std::vector<double>{1.0, sg + p.beta})), series_shift(f_hat, 4));
    const SpectralSeries one = to_spectral(make_series(0, std::vector<double>{1.0}));
    const SpectralSeries zs = to_spectral(make_series(-1, std::vector<double>{1.0, -sg}));
    const SpectralSeries zb = to_spectral(make_series(-1, std::vector<double>{1.0, -p.beta}));
    const SpectralSeries zszb = series_mul(zs, zb);
    const SpectralSeries n1 = series_sub(series_mul(zszb, lam), one);
    const SpectralSeries n2 = series_mul(zb, n1);
    const SpectralSeries r22 = series_mul(zb, lam);
    const SpectralSeries l = series_mul(zszb, n1);
    return series_sumsq(n1) + series_sumsq(lam) + series_sumsq(n2) + series_sumsq(r22) +
           series_sumsq(l) + series_sumsq(n1);
}

double freq_cost(const PlantParams& p, const ExtentVector& f, int grid) {
    double acc = 0.0;
    for (int j = 0; j < grid; ++j) {
        const double theta = 2.0 * std::numbers::pi * j / grid;
        acc += stack_cost_sq_at(p, theta, spatial_eval(f, theta));
    }
    return std::sqrt(acc / grid);
}

} // namespace

SynthesisResult solve_finite_extent(const PlantParams& p, int E, const SolverConfig& cfg,
                                    Param which) {
    validate(cfg);
    if (E < 0) throw ConfigError("solve_finite_extent: extent must be >= 0");
    if (which == Param::both)
        throw ConfigError("solve_finite_extent: pick one parameterization per solve");

    const AffineMapPair pair = which == Param::sl ? assemble_sl(p, E) : assemble_io(p, E);
    const LsProblem prob = build_problem(pair, cfg.horizon_T);
    const LsSolution sol = solve_problem(prob, cfg.normal_eq_tol);

    SynthesisResult res;
    res.E = E;
    res.T = cfg.horizon_T;
    res.which = which;
    res.f = taps_to_vector(sol.x, E, cfg.horizon_T);
    res.J = sol.J;
    res.residual_gradient_norm = sol.grad_norm;
    res.J_freq_check = freq_cost(p, res.f, cfg.theta_grid);
    res.maps_sl = sl_index_maps(p, build_r12(p, res.f));
    return res;
}

double cost_of(const PlantParams& p, const ExtentVector& f, const SolverConfig& cfg, Param which) {
    validate(cfg);
    if (which == Param::both) throw ConfigError("cost_of: pick one parameterization");
    const AffineMapPair pair = which == Param::sl ? assemble_sl(p, f.extent) : assemble_io(p, f.extent);
    double acc = 0.0;
    for (const auto& blk : pair.blocks) {
        const ExtentVector y = apply_block(blk, f);
        for (const auto& e : y.entry) acc += series_sumsq(e);
    }
    return std::sqrt(acc);
}

ScalarSolve solve_theta(const PlantParams& p, double theta, int T, double normal_eq_tol) {
    if (T < 1) throw ConfigError("solve_theta: horizon must be >= 1");
    const double sg = sigma_at(p, theta);
    const LaurentSeries one = make_series(0, std::vector<double>{1.0});
    const LaurentSeries zs = make_series(-1, std::vector<double>{1.0, -sg});
    const LaurentSeries zb = make_series(-1, std::vector<double>{1.0, -p.beta});
    const LaurentSeries zszb = series_mul(zs, zb);
    const LaurentSeries g = make_series(2, std::vector<double>{1.0, sg + p.beta});

    // scalar instance of the same stack: every block has spatial extents zero
    const std::vector<LaurentSeries> v = {zszb, one, series_mul(zb, zszb), zb,
                                          series_mul(zszb, zszb), zszb};
    const std::vector<LaurentSeries> off = {one, {}, zb, {}, zszb, one};

    AffineMapPair pair;
    pair.input_extent = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        MapBlock blk;
        blk.name = "scalar" + std::to_string(i);
        blk.in_extent = 0;
        blk.out_extent = 0;
        blk.bandwidth = 0;
        blk.band = {series_shift(v[i], 4)};
        blk.h = ExtentVector(0);
        blk.h.at(0) = series_sub(series_mul(v[i], g), off[i]);
        pair.blocks.push_back(std::move(blk));
    }

    const LsProblem prob = build_problem(pair, T);
    const LsSolution sol = solve_problem(prob, normal_eq_tol);
    return {sol.J * sol.J, sol.grad_norm};
}

std::vector<SweepRow> sweep(const PlantParams& p, const std::vector<int>& E_list,
                            const SolverConfig& cfg, Param which, std::optional<double> j_inf) {
    validate(cfg);
    std::vector<SweepRow> rows(E_list.size());
    const auto run_one = [&](int i) {
        SweepRow& row = rows[std::size_t(i)];
        row.E = E_list[std::size_t(i)];
        row.T_used = cfg.horizon_T;
        row.J_sl = row.J_io = row.gap_sl = row.gap_io = row.residual_grad =
            std::numeric_limits<double>::quiet_NaN();
        try {
            double grad = 0.0;
            if (which == Param::sl || which == Param::both) {
                const SynthesisResult r = solve_finite_extent(p, row.E, cfg, Param::sl);
                row.J_sl = r.J;
                grad = std::max(grad, r.residual_gradient_norm);
            }
            if (which == Param::io || which == Param::both) {
                const SynthesisResult r = solve_finite_extent(p, row.E, cfg, Param::io);
                row.J_io = r.J;
                grad = std::max(grad, r.residual_gradient_norm);
            }
            row.residual_grad = grad;
            if (j_inf) {
                if (!std::isnan(row.J_sl)) row.gap_sl = row.J_sl - *j_inf;
                if (!std::isnan(row.J_io)) row.gap_io = row.J_io - *j_inf;
            }
            row.status = "ok";
        } catch (const NumericalError&) {
            row.status = "numerical_error";
        }
    };
    parallel_for(int(E_list.size()), thread_budget(), run_one);
    return rows;
}

std::vector<HorizonRow> horizon_convergence(const PlantParams& p, int E,
                                            const std::vector<int>& T_list,
                                            const SolverConfig& cfg, Param which) {
    std::vector<HorizonRow> rows;
    rows.reserve(T_list.size());
    for (const int T : T_list) {
        SolverConfig c = cfg;
        c.horizon_T = T;
        const SynthesisResult r = solve_finite_extent(p, E, c, which);
        HorizonRow row;
        row.T = T;
        row.J = r.J;
        row.rel_change = rows.empty() ? 0.0 : std::abs(r.J - rows.back().J) / r.J;
        rows.push_back(row);
    }
    return rows;
}

} // namespace localsyn
