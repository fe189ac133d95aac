#include "localsyn/oracle.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "localsyn/errors.hpp"
#include "localsyn/parallel.hpp"

namespace localsyn {

namespace {

void validate(const OracleConfig& cfg) {
    if (cfg.theta_points < 128) throw ConfigError("oracle: theta_points must be >= 128");
    if (cfg.oracle_T < 1) throw ConfigError("oracle: oracle_T must be >= 1");
}

} // namespace

double per_theta_cost(const PlantParams& p, double theta, const OracleConfig& cfg) {
    validate(cfg);
    return solve_theta(p, theta, cfg.oracle_T).cost_sq;
}

std::vector<double> per_theta_profile(const PlantParams& p, const OracleConfig& cfg) {
    validate(cfg);
    const int n = cfg.theta_points;
    std::vector<double> costs(static_cast<std::size_t>(n));
    parallel_for(n, thread_budget(), [&](int i) {
        const double theta = 2.0 * std::numbers::pi * i / n;
        costs[std::size_t(i)] = solve_theta(p, theta, cfg.oracle_T).cost_sq;
    });
    return costs;
}

double j_inf(const PlantParams& p, const OracleConfig& cfg) {
    const std::vector<double> costs = per_theta_profile(p, cfg);
    double acc = 0.0;
    for (const double c : costs) acc += c;  // ordered reduction
    return std::sqrt(acc / double(costs.size()));
}

} // namespace localsyn
