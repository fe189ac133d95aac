#include "localsyn/emit.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "localsyn/affine.hpp"
#include "localsyn/io_maps.hpp"
#include "localsyn/sl_maps.hpp"

namespace localsyn {

std::string fmt_g15(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows,
                     std::optional<double> j_inf_value) {
    os << "E,J_sl,J_io,J_inf,gap_sl,gap_io,T_used,residual_grad,status\n";
    const double ji = j_inf_value ? *j_inf_value : std::nan("");
    for (const auto& r : rows) {
        os << r.E << ',' << fmt_g15(r.J_sl) << ',' << fmt_g15(r.J_io) << ',' << fmt_g15(ji) << ','
           << fmt_g15(r.gap_sl) << ',' << fmt_g15(r.gap_io) << ',' << r.T_used << ','
           << fmt_g15(r.residual_grad) << ',' << r.status << '\n';
    }
}

void write_oracle_csv(std::ostream& os, const std::vector<double>& profile) {
    os << "theta,cost_sq\n";
    const std::size_t n = profile.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double theta = 2.0 * std::numbers::pi * double(i) / double(n);
        os << fmt_g15(theta) << ',' << fmt_g15(profile[i]) << '\n';
    }
}

void write_gnuplot_script(std::ostream& os, const std::string& csv_name) {
    os << "# companion plot for " << csv_name << "\n"
       << "set datafile separator ','\n"
       << "set terminal pngcairo size 900,600\n"
       << "set output 'sweep.png'\n"
       << "set logscale y\n"
       << "set xlabel 'spatial extent E'\n"
       << "set ylabel 'J(E) - J_inf'\n"
       << "set key top right\n"
       << "plot '" << csv_name << "' every ::1 using 1:5 with linespoints title 'system-level', \\\n"
       << "     '" << csv_name << "' every ::1 using 1:6 with linespoints title 'input-output'\n";
}

namespace {

void json_series(std::ostream& os, const LaurentSeries& s) {
    os << '[';
    bool first = true;
    // highest power of z first; stored powers are powers of z^{-1}
    for (int t = s.lowest_power(); t <= s.highest_power(); ++t) {
        const double c = s.coeff(t);
        if (c == 0.0) continue;
        if (!first) os << ", ";
        first = false;
        os << '[' << -t << ", " << fmt_g15(c) << ']';
    }
    os << ']';
}

void json_band(std::ostream& os, const MapBlock& b, const std::string& indent) {
    os << "[\n";
    for (int d = -b.bandwidth; d <= b.bandwidth; ++d) {
        os << indent << "  {\"offset\": " << d << ", \"terms\": ";
        json_series(os, b.band_at(d));
        os << (d < b.bandwidth ? "},\n" : "}\n");
    }
    os << indent << ']';
}

void json_rows(std::ostream& os, const ExtentVector& h, const std::string& indent) {
    os << "[\n";
    for (int k = -h.extent; k <= h.extent; ++k) {
        os << indent << "  {\"offset\": " << k << ", \"terms\": ";
        json_series(os, h.at(k));
        os << (k < h.extent ? "},\n" : "}\n");
    }
    os << indent << ']';
}

void json_stack(std::ostream& os, const AffineMapPair& raw, const AffineMapPair& assembled) {
    os << "{\n      \"input_extent\": " << raw.input_extent << ",\n      \"blocks\": [\n";
    for (std::size_t i = 0; i < raw.blocks.size(); ++i) {
        const MapBlock& rb = raw.blocks[i];
        const MapBlock& ab = assembled.blocks[i];
        os << "        {\n"
           << "          \"name\": \"" << rb.name << "\",\n"
           << "          \"output_extent\": " << rb.out_extent << ",\n"
           << "          \"bandwidth\": " << rb.bandwidth << ",\n"
           << "          \"v\": ";
        json_band(os, rb, "          ");
        os << ",\n          \"h\": ";
        json_rows(os, rb.h, "          ");
        os << ",\n          \"v_assembled\": ";
        json_band(os, ab, "          ");
        os << ",\n          \"h_assembled\": ";
        json_rows(os, ab.h, "          ");
        os << "\n        }" << (i + 1 < raw.blocks.size() ? "," : "") << "\n";
    }
    os << "      ]\n    }";
}

} // namespace

void dump_maps_json(std::ostream& os, const PlantParams& p, int E) {
    os << "{\n  \"E\": " << E << ",\n  \"plant\": {\"alpha\": " << fmt_g15(p.alpha)
       << ", \"beta\": " << fmt_g15(p.beta) << ", \"kappa\": " << fmt_g15(p.kappa) << "},\n"
       << "  \"parameterizations\": {\n    \"sl\": ";
    json_stack(os, build_sl_blocks(p, E), assemble_sl(p, E));
    os << ",\n    \"io\": ";
    json_stack(os, build_io_blocks(p, E), assemble_io(p, E));
    os << "\n  }\n}\n";
}

} // namespace localsyn
