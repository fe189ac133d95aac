#include "localsyn/spatial.hpp"

#include <cmath>
#include <numbers>

namespace localsyn {

ExtentVector vec_pad(const ExtentVector& v, int E) {
    if (E < v.extent) throw std::invalid_argument("vec_pad: target extent smaller than source");
    ExtentVector r(E);
    for (int k = -v.extent; k <= v.extent; ++k) r.at(k) = v.at(k);
    return r;
}

ExtentVector vec_add(const ExtentVector& a, const ExtentVector& b) {
    const int E = std::max(a.extent, b.extent);
    ExtentVector r(E);
    for (int k = -E; k <= E; ++k) {
        if (a.in_range(k)) r.at(k) = a.at(k);
        if (b.in_range(k)) r.at(k) = series_add(r.at(k), b.at(k));
    }
    return r;
}

ExtentVector vec_sub(const ExtentVector& a, const ExtentVector& b) {
    return vec_add(a, vec_scale(b, -1.0));
}

ExtentVector vec_scale(const ExtentVector& a, double k) {
    ExtentVector r(a.extent);
    for (int j = -a.extent; j <= a.extent; ++j) r.at(j) = series_scale(a.at(j), k);
    return r;
}

ExtentVector vec_mul_series(const ExtentVector& a, const LaurentSeries& s) {
    ExtentVector r(a.extent);
    for (int j = -a.extent; j <= a.extent; ++j) r.at(j) = series_mul(a.at(j), s);
    return r;
}

int measured_extent(const ExtentVector& v) {
    for (int k = v.extent; k > 0; --k)
        if (!v.at(k).empty() || !v.at(-k).empty()) return k;
    return 0;
}

double h2_norm(const ExtentVector& v) {
    double s = 0.0;
    for (const auto& e : v.entry) s += series_sumsq(e);
    return std::sqrt(s);
}

SpectralSeries spatial_eval(const ExtentVector& v, double theta) {
    SpectralSeries acc;
    for (int k = -v.extent; k <= v.extent; ++k) {
        const LaurentSeries& e = v.at(k);
        if (e.empty()) continue;
        const std::complex<double> w = std::polar(1.0, -k * theta);
        std::vector<std::complex<double>> c(e.c.size());
        for (std::size_t i = 0; i < e.c.size(); ++i) c[i] = w * e.c[i];
        acc = series_add(acc, BasicSeries<std::complex<double>>{e.lo, std::move(c)});
    }
    return acc;
}

double h2_norm_freq(const ExtentVector& v, int grid) {
    if (grid < 2 * v.extent + 2)
        throw std::invalid_argument("h2_norm_freq: grid must be at least 2*extent + 2");
    double s = 0.0;
    for (int j = 0; j < grid; ++j) {
        const double theta = 2.0 * std::numbers::pi * j / grid;
        s += series_sumsq(spatial_eval(v, theta));
    }
    return std::sqrt(s / grid);
}

CausalCheck causal_check(const ExtentVector& v, double tol, bool strict) {
    CausalCheck worst;
    for (const auto& e : v.entry) {
        const CausalCheck c = causal_check(e, tol, strict);
        if (!c.ok && (worst.ok || c.worst > worst.worst)) worst = c;
    }
    return worst;
}

} // namespace localsyn
