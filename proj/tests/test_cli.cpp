#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#ifndef LOCALSYN_CLI
#error "LOCALSYN_CLI must point at the built binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// run the tool with stdout captured and stderr discarded
RunResult run(const std::string& args) {
    const std::string out_path = std::string(std::getenv("TEST_TMPDIR") ? std::getenv("TEST_TMPDIR") : "/tmp") + "/cli_out.txt";
    const std::string cmd = std::string(LOCALSYN_CLI) + " " + args + " > " + out_path + " 2>/dev/null";
    const int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(out_path);
    return r;
}

std::string tmpdir() {
    static int counter = 0;
    const std::string d = "/tmp/localsyn_cli_test_" + std::to_string(++counter);
    std::system(("rm -rf " + d).c_str());
    return d;
}

} // namespace

TEST_CASE("sweep writes the documented CSV") {
    const std::string d = tmpdir();
    const RunResult r = run("sweep --e-min 1 --e-max 2 --horizon 25 --theta-points 128 --out " + d);
    CHECK(r.exit_code == 0);
    const std::string csv = slurp(d + "/sweep.csv");
    CHECK(csv.rfind("E,J_sl,J_io,J_inf,gap_sl,gap_io,T_used,residual_grad,status", 0) == 0);
    // one row per extent plus the header
    int lines = 0;
    for (const char c : csv)
        if (c == '\n') ++lines;
    CHECK(lines == 3);
    CHECK(csv.find(",ok") != std::string::npos);
}

TEST_CASE("sweep is byte-identical across reruns") {
    const std::string d1 = tmpdir(), d2 = tmpdir();
    const std::string args = "--e-min 1 --e-max 2 --horizon 25 --theta-points 128 --seed 5 --param sl";
    CHECK(run("sweep " + args + " --out " + d1).exit_code == 0);
    CHECK(run("sweep " + args + " --out " + d2).exit_code == 0);
    const std::string a = slurp(d1 + "/sweep.csv"), b = slurp(d2 + "/sweep.csv");
    CHECK(!a.empty());
    CHECK(a == b);
    // single parameterization leaves the other column empty-valued
    CHECK(a.find("nan") != std::string::npos);
}

TEST_CASE("gnuplot companion script is written on request") {
    const std::string d = tmpdir();
    const RunResult r =
        run("sweep --e-min 1 --e-max 1 --horizon 20 --theta-points 128 --emit-gnuplot --out " + d);
    CHECK(r.exit_code == 0);
    const std::string plt = slurp(d + "/sweep.gnuplot");
    CHECK(plt.find("sweep.csv") != std::string::npos);
    CHECK(plt.find("logscale") != std::string::npos);
}

TEST_CASE("oracle prints the optimum and writes the profile") {
    const std::string d = tmpdir();
    const RunResult r = run("oracle --theta-points 128 --horizon 120 --out " + d);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("j_inf = 31.4108043392") != std::string::npos);
    const std::string csv = slurp(d + "/oracle.csv");
    CHECK(csv.rfind("theta,cost_sq", 0) == 0);
}

TEST_CASE("verify succeeds and the hidden fault hook trips it") {
    CHECK(run("verify --e-max 1").exit_code == 0);
    const RunResult faulted = run("verify --e-max 1 --inject-fault");
    CHECK(faulted.exit_code == 1);
    CHECK(faulted.out.find("AUDIT FAIL") != std::string::npos);
}

TEST_CASE("dump-maps emits parseable JSON with the advertised entries") {
    const RunResult r = run("dump-maps --extent 0");
    CHECK(r.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["E"] == 0);
    bool found = false;
    for (const auto& blk : doc["parameterizations"]["sl"]["blocks"]) {
        if (blk["name"] != "l") continue;
        for (const auto& row : blk["h"]) {
            if (row["offset"] != 1) continue;
            // alpha kappa (z - beta) at the default parameters
            REQUIRE(row["terms"].size() == 2);
            CHECK(row["terms"][0][0] == 1);
            CHECK(double(row["terms"][0][1]) == doctest::Approx(1.2));
            CHECK(row["terms"][1][0] == 0);
            CHECK(double(row["terms"][1][1]) == doctest::Approx(-1.2));
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("config file drives a run and flags override it") {
    const std::string d = tmpdir();
    std::system(("mkdir -p " + d).c_str());
    {
        std::ofstream cfg(d + "/run.cfg");
        cfg << "[plant]\nalpha = 1.5\nbeta = 1.0\nkappa = 0.8\n"
            << "[solver]\nhorizon = 20\ntheta_points = 128\n"
            << "[oracle]\ntheta_points = 128\nhorizon = 60\n"
            << "[run]\ne_min = 1\ne_max = 1\nparam = sl\n";
    }
    const RunResult r = run("sweep --config " + d + "/run.cfg --e-max 2 --out " + d);
    CHECK(r.exit_code == 0);
    const std::string csv = slurp(d + "/sweep.csv");
    CHECK(csv.find("\n2,") != std::string::npos);  // flag widened the range
    CHECK(csv.find(",20,") != std::string::npos);  // horizon taken from the file
}

TEST_CASE("error paths map to exit codes") {
    CHECK(run("sweep --config /does/not/exist.cfg").exit_code == 2);
    CHECK(run("sweep --e-min 3 --e-max 1").exit_code == 2);
    CHECK(run("sweep --param neither").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
    CHECK(run("dump-maps --extent -1").exit_code == 2);
}
