#include "localsyn/runcfg.hpp"

#include <charconv>
#include <fstream>

#include "localsyn/errors.hpp"

namespace localsyn {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    double out = 0.0;
    const char* end = v.data() + v.size();
    const auto [ptr, ec] = std::from_chars(v.data(), end, out);
    if (ec != std::errc{} || ptr != end)
        throw ConfigError("config: " + key + " = '" + v + "' is not a number");
    return out;
}

long parse_int(const std::string& key, const std::string& v) {
    long out = 0;
    const char* end = v.data() + v.size();
    const auto [ptr, ec] = std::from_chars(v.data(), end, out);
    if (ec != std::errc{} || ptr != end)
        throw ConfigError("config: " + key + " = '" + v + "' is not an integer");
    return out;
}

bool parse_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError("config: " + key + " = '" + v + "' is not a boolean");
}

void apply(RunConfig& cfg, const std::string& section, const std::string& key,
           const std::string& value) {
    const std::string full = section.empty() ? key : section + "." + key;
    if (section == "plant") {
        if (key == "alpha") cfg.plant.alpha = parse_double(full, value);
        else if (key == "beta") cfg.plant.beta = parse_double(full, value);
        else if (key == "kappa") cfg.plant.kappa = parse_double(full, value);
        else throw ConfigError("config: unknown key " + full);
    } else if (section == "solver") {
        if (key == "horizon") cfg.solver.horizon_T = int(parse_int(full, value));
        else if (key == "theta_points") cfg.solver.theta_grid = int(parse_int(full, value));
        else if (key == "normal_eq_tol") cfg.solver.normal_eq_tol = parse_double(full, value);
        else if (key == "convergence_rtol") cfg.solver.convergence_rtol = parse_double(full, value);
        else throw ConfigError("config: unknown key " + full);
    } else if (section == "oracle") {
        if (key == "theta_points") cfg.oracle.theta_points = int(parse_int(full, value));
        else if (key == "horizon") cfg.oracle.oracle_T = int(parse_int(full, value));
        else throw ConfigError("config: unknown key " + full);
    } else if (section == "run") {
        if (key == "e_min" || key == "e_max") {
            const int v = int(parse_int(full, value));
            int lo = cfg.E_range.empty() ? 0 : cfg.E_range.front();
            int hi = cfg.E_range.empty() ? 0 : cfg.E_range.back();
            (key == "e_min" ? lo : hi) = v;
            if (lo > hi) (key == "e_min" ? hi : lo) = v;
            set_extent_range(cfg, lo, hi);
        } else if (key == "out") {
            cfg.output_dir = value;
        } else if (key == "seed") {
            cfg.seed = std::uint64_t(parse_int(full, value));
        } else if (key == "param") {
            cfg.param = param_from_string(value);
        } else if (key == "emit_gnuplot") {
            cfg.emit_gnuplot = parse_bool(full, value);
        } else {
            throw ConfigError("config: unknown key " + full);
        }
    } else {
        throw ConfigError("config: unknown section [" + section + "]");
    }
}

} // namespace

void set_extent_range(RunConfig& cfg, int lo, int hi) {
    if (lo > hi) throw ConfigError("config: extent range has e_min > e_max");
    cfg.E_range.clear();
    for (int e = lo; e <= hi; ++e) cfg.E_range.push_back(e);
}

void load_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("config: " + path + ":" + std::to_string(lineno) +
                                  ": malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: " + path + ":" + std::to_string(lineno) +
                              ": expected key = value");
        apply(cfg, section, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
}

void validate_config(const RunConfig& cfg) {
    if (cfg.E_range.empty()) throw ConfigError("config: extent range is empty");
    int prev = -1;
    for (const int e : cfg.E_range) {
        if (e < 0) throw ConfigError("config: extents must be nonnegative");
        if (e <= prev) throw ConfigError("config: extents must be strictly increasing");
        prev = e;
    }
    if (cfg.solver.horizon_T < 1) throw ConfigError("config: solver horizon must be >= 1");
    if (cfg.solver.theta_grid < 64) throw ConfigError("config: solver theta_points must be >= 64");
    if (cfg.oracle.theta_points < 128)
        throw ConfigError("config: oracle theta_points must be >= 128");
    if (cfg.oracle.oracle_T < 1) throw ConfigError("config: oracle horizon must be >= 1");
    if (cfg.output_dir.empty()) throw ConfigError("config: output directory is empty");
}

std::vector<std::string> config_warnings(const RunConfig& cfg) {
    std::vector<std::string> w = stability_notes(cfg.plant);
    if (cfg.oracle.oracle_T < 2 * cfg.solver.horizon_T)
        w.push_back("oracle horizon " + std::to_string(cfg.oracle.oracle_T) +
                    " is under twice the sweep horizon " + std::to_string(cfg.solver.horizon_T) +
                    "; reported gaps may be dominated by oracle truncation");
    return w;
}

} // namespace localsyn
