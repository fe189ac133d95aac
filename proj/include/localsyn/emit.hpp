#pragma once

// Output writers for the command line tool: sweep CSV, oracle profile CSV,
// a gnuplot companion script, and a JSON dump of the affine map stacks.
// All numbers are printed with 15 significant digits and a period decimal
// separator regardless of locale.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "localsyn/model_match.hpp"
#include "localsyn/plant.hpp"

namespace localsyn {

std::string fmt_g15(double v);

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows,
                     std::optional<double> j_inf_value);

// theta grid profile of squared per-frequency costs
void write_oracle_csv(std::ostream& os, const std::vector<double>& profile);

void write_gnuplot_script(std::ostream& os, const std::string& csv_name);

// both parameterization stacks at extent E: raw blocks and assembled
// blocks, each series as [power of z, coefficient] pairs
void dump_maps_json(std::ostream& os, const PlantParams& p, int E);

} // namespace localsyn
