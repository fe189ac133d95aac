#pragma once

// Run configuration shared by the command line tool.
//
// Config files are flat `key = value` lines grouped under [section]
// headers.  Sections: [plant], [solver], [oracle], [run].  Lines starting
// with # and text after # on a line are comments.  Unknown sections or
// keys are configuration errors; command line flags override file values.

#include <cstdint>
#include <string>
#include <vector>

#include "localsyn/model_match.hpp"
#include "localsyn/oracle.hpp"
#include "localsyn/plant.hpp"

namespace localsyn {

struct RunConfig {
    PlantParams plant;
    std::vector<int> E_range = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    SolverConfig solver;
    OracleConfig oracle;
    std::string output_dir = ".";
    std::uint64_t seed = 0;
    Param param = Param::both;
    bool emit_gnuplot = false;
};

// replace E_range by lo..hi inclusive
void set_extent_range(RunConfig& cfg, int lo, int hi);

// parse a config file into cfg (keys overwrite current values)
void load_config_file(RunConfig& cfg, const std::string& path);

// throws ConfigError when any field violates its contract
void validate_config(const RunConfig& cfg);

// non-fatal observations worth printing to stderr
std::vector<std::string> config_warnings(const RunConfig& cfg);

} // namespace localsyn
