// localsyn: synthesis sweeps, the unconstrained oracle, the structural
// audit, and map dumps behind one command line surface.
//
// Exit codes: 0 success, 1 verification failure, 2 configuration error,
// 3 numerical failure.  LOCALSYN_THREADS caps the worker count.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "localsyn/emit.hpp"
#include "localsyn/errors.hpp"
#include "localsyn/model_match.hpp"
#include "localsyn/oracle.hpp"
#include "localsyn/runcfg.hpp"
#include "localsyn/verify.hpp"

namespace {

using namespace localsyn;

struct CommonOpts {
    std::string config;
    double alpha = 1.5, beta = 1.0, kappa = 0.8;
    int e_min = 1, e_max = 10;
    int horizon = 60, theta_points = 512;
    std::string out = ".";
    std::uint64_t seed = 0;
    std::string param = "both";
    bool emit_gnuplot = false;

    CLI::Option *alpha_o = nullptr, *beta_o = nullptr, *kappa_o = nullptr;
    CLI::Option *emin_o = nullptr, *emax_o = nullptr;
    CLI::Option *horizon_o = nullptr, *theta_o = nullptr;
    CLI::Option *out_o = nullptr, *seed_o = nullptr, *param_o = nullptr, *gnuplot_o = nullptr;
};

void add_common(CLI::App& sub, CommonOpts& c, int emin_def, int emax_def) {
    c.e_min = emin_def;
    c.e_max = emax_def;
    sub.add_option("--config", c.config, "config file (key = value under [section] headers)");
    c.alpha_o = sub.add_option("--alpha", c.alpha, "subsystem gain alpha");
    c.beta_o = sub.add_option("--beta", c.beta, "integrator pole beta");
    c.kappa_o = sub.add_option("--kappa", c.kappa, "coupling strength kappa");
    c.emin_o = sub.add_option("--e-min", c.e_min, "smallest extent");
    c.emax_o = sub.add_option("--e-max", c.e_max, "largest extent");
    c.horizon_o = sub.add_option("--horizon", c.horizon, "FIR horizon T");
    c.theta_o = sub.add_option("--theta-points", c.theta_points, "frequency grid size");
    c.out_o = sub.add_option("--out", c.out, "output directory");
    c.seed_o = sub.add_option("--seed", c.seed, "seed for randomized checks");
    c.param_o = sub.add_option("--param", c.param, "parameterization: sl, io or both");
    c.gnuplot_o = sub.add_flag("--emit-gnuplot", c.emit_gnuplot, "write a companion plot script");
}

RunConfig build_config(const CommonOpts& c, bool horizon_is_oracle = false) {
    RunConfig cfg;
    set_extent_range(cfg, c.e_min, c.e_max);
    if (!c.config.empty()) load_config_file(cfg, c.config);
    if (c.alpha_o->count()) cfg.plant.alpha = c.alpha;
    if (c.beta_o->count()) cfg.plant.beta = c.beta;
    if (c.kappa_o->count()) cfg.plant.kappa = c.kappa;
    if (c.emin_o->count() || c.emax_o->count()) {
        const int lo = c.emin_o->count() ? c.e_min : cfg.E_range.front();
        const int hi = c.emax_o->count() ? c.e_max : cfg.E_range.back();
        set_extent_range(cfg, lo, hi);
    }
    if (c.horizon_o->count()) {
        if (horizon_is_oracle) cfg.oracle.oracle_T = c.horizon;
        else cfg.solver.horizon_T = c.horizon;
    }
    if (c.theta_o->count()) {
        cfg.solver.theta_grid = c.theta_points;
        cfg.oracle.theta_points = c.theta_points;
    }
    if (c.out_o->count()) cfg.output_dir = c.out;
    if (c.seed_o->count()) cfg.seed = c.seed;
    if (c.param_o->count()) cfg.param = param_from_string(c.param);
    if (c.gnuplot_o->count()) cfg.emit_gnuplot = c.emit_gnuplot;
    validate_config(cfg);
    for (const auto& w : config_warnings(cfg)) std::cerr << "warning: " << w << "\n";
    return cfg;
}

std::ofstream open_output(const RunConfig& cfg, const std::string& name) {
    std::error_code ec;
    std::filesystem::create_directories(cfg.output_dir, ec);
    const std::string path = cfg.output_dir + "/" + name;
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write " + path);
    return out;
}

int cmd_sweep(const CommonOpts& c) {
    const RunConfig cfg = build_config(c);
    const double ji = j_inf(cfg.plant, cfg.oracle);
    const std::vector<SweepRow> rows = sweep(cfg.plant, cfg.E_range, cfg.solver, cfg.param, ji);

    auto csv = open_output(cfg, "sweep.csv");
    write_sweep_csv(csv, rows, ji);
    std::cout << "wrote " << cfg.output_dir << "/sweep.csv\n";
    if (cfg.emit_gnuplot) {
        auto plt = open_output(cfg, "sweep.gnuplot");
        write_gnuplot_script(plt, "sweep.csv");
        std::cout << "wrote " << cfg.output_dir << "/sweep.gnuplot\n";
    }

    std::cout << "j_inf = " << fmt_g15(ji) << "\n";
    bool ok = true;
    for (const auto& r : rows) {
        std::cout << "E = " << r.E << "  J_sl = " << fmt_g15(r.J_sl)
                  << "  J_io = " << fmt_g15(r.J_io) << "  gap_sl = " << fmt_g15(r.gap_sl)
                  << (r.status == "ok" ? "" : "  [" + r.status + "]") << "\n";
        ok = ok && r.status == "ok";
    }
    if (!ok) {
        std::cerr << "error: one or more extents failed to solve\n";
        return 3;
    }
    return 0;
}

int cmd_oracle(const CommonOpts& c) {
    const RunConfig cfg = build_config(c, /*horizon_is_oracle=*/true);
    const std::vector<double> profile = per_theta_profile(cfg.plant, cfg.oracle);
    double acc = 0.0;
    for (const double v : profile) acc += v;
    const double ji = std::sqrt(acc / double(profile.size()));

    auto csv = open_output(cfg, "oracle.csv");
    write_oracle_csv(csv, profile);
    std::cout << "wrote " << cfg.output_dir << "/oracle.csv\n";
    std::cout << "j_inf = " << fmt_g15(ji) << "\n";
    return 0;
}

int cmd_verify(const CommonOpts& c, bool inject_fault) {
    const RunConfig cfg = build_config(c);
    const Audit audit = run_audit(cfg.plant, cfg.E_range, 1e-10, cfg.seed, inject_fault);
    print_audit(std::cout, audit);
    return audit.pass() ? 0 : 1;
}

int cmd_dump_maps(const CommonOpts& c, int extent) {
    const RunConfig cfg = build_config(c);
    if (extent < 0) throw ConfigError("dump-maps: extent must be nonnegative");
    dump_maps_json(std::cout, cfg.plant, extent);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"H2 synthesis with locality constraints on a chain of coupled subsystems"};
    app.require_subcommand(1);

    CommonOpts sweep_opts, oracle_opts, verify_opts, dump_opts;
    bool inject_fault = false;
    int dump_extent = 0;

    CLI::App* s_sweep = app.add_subcommand("sweep", "solve over a range of extents, write sweep.csv");
    add_common(*s_sweep, sweep_opts, 1, 10);

    CLI::App* s_oracle = app.add_subcommand("oracle", "unconstrained optimum on a frequency grid");
    add_common(*s_oracle, oracle_opts, 1, 10);

    CLI::App* s_verify = app.add_subcommand("verify", "run the structural audit");
    add_common(*s_verify, verify_opts, 0, 3);
    s_verify->add_flag("--inject-fault", inject_fault)->group("");  // audit self-test hook

    CLI::App* s_dump = app.add_subcommand("dump-maps", "print both map stacks as JSON");
    add_common(*s_dump, dump_opts, 0, 0);
    s_dump->add_option("--extent", dump_extent, "extent of the dumped stacks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (s_sweep->parsed()) return cmd_sweep(sweep_opts);
        if (s_oracle->parsed()) return cmd_oracle(oracle_opts);
        if (s_verify->parsed()) return cmd_verify(verify_opts, inject_fault);
        if (s_dump->parsed()) return cmd_dump_maps(dump_opts, dump_extent);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NumericalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
