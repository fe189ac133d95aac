#include "localsyn/sl_maps.hpp"

#include "localsyn/errors.hpp"

namespace localsyn {

namespace {

LaurentSeries monic_minus(double c) {  // z - c
    return make_series(-1, std::vector<double>{1.0, -c});
}

// (z - sigma) applied in the index domain: advance by one step minus the sigma kernel
ExtentVector z_minus_sigma(const PlantParams& p, const ExtentVector& v) {
    const ExtentVector sv = apply_sigma(p, v);
    ExtentVector r(sv.extent);
    for (int k = -v.extent; k <= v.extent; ++k) r.at(k) = series_shift(v.at(k), -1);
    return vec_sub(r, sv);
}

ExtentVector z_minus_beta(const PlantParams& p, const ExtentVector& v) {
    return vec_mul_series(v, monic_minus(p.beta));
}

ExtentVector delta_vec(int E, const LaurentSeries& s) {
    ExtentVector v(E);
    v.at(0) = s;
    return v;
}

const LaurentSeries kOne = make_series(0, std::vector<double>{1.0});

} // namespace

SlFreqMaps sl_freq_maps(const PlantParams& p, double theta, const LaurentSeries& r12) {
    SlFreqMaps m;
    m.theta = theta;
    m.sigma = sigma_at(p, theta);
    const LaurentSeries zs = monic_minus(m.sigma);
    const LaurentSeries zb = monic_minus(p.beta);
    m.r12 = r12;
    m.r11 = series_mul(zs, r12);
    m.r22 = series_mul(zb, r12);
    m.n1 = series_sub(series_mul(zs, m.r22), kOne);
    m.r21 = m.n1;
    m.m2 = m.n1;
    m.m1 = series_sub(series_mul(zs, series_mul(zs, m.r22)), zs);
    m.n2 = series_sub(series_mul(zb, series_mul(zs, m.r22)), zb);
    m.l = series_mul(series_mul(zs, zb), m.n1);
    return m;
}

SlIndexMaps sl_index_maps(const PlantParams& p, const ExtentVector& r12) {
    SlIndexMaps m;
    m.r12 = r12;
    m.r11 = z_minus_sigma(p, r12);
    m.r22 = z_minus_beta(p, r12);
    const ExtentVector zszb = z_minus_sigma(p, m.r22);
    m.n1 = vec_sub(zszb, delta_vec(zszb.extent, kOne));
    m.r21 = m.n1;
    m.m2 = m.n1;
    m.m1 = vec_sub(z_minus_sigma(p, zszb), z_minus_sigma(p, delta_vec(r12.extent, kOne)));
    m.n2 = vec_sub(z_minus_beta(p, zszb), delta_vec(r12.extent, monic_minus(p.beta)));
    m.l = z_minus_sigma(p, z_minus_beta(p, m.n1));
    return m;
}

ExtentVector r12_offset(const PlantParams& p, int E) {
    ExtentVector g(E + 1);
    const double ak = p.alpha * p.kappa;
    g.at(0) = make_series(2, std::vector<double>{1.0, p.alpha + p.beta});
    g.at(-1) = make_series(3, std::vector<double>{ak});
    g.at(1) = make_series(3, std::vector<double>{ak});
    return g;
}

ExtentVector build_r12(const PlantParams& p, const ExtentVector& f) {
    const int E = f.extent;
    ExtentVector r = r12_offset(p, E);
    for (int k = -E; k <= E; ++k)
        r.at(k) = series_add(r.at(k), series_shift(f.at(k), 4));
    return r;
}

AffineMapPair build_sl_blocks(const PlantParams& p, int E) {
    const double ak = p.alpha * p.kappa;
    const LaurentSeries zb = monic_minus(p.beta);
    const LaurentSeries za = monic_minus(p.alpha);
    const LaurentSeries zb2 = series_mul(zb, zb);
    const LaurentSeries akzb = series_scale(zb, -ak);

    AffineMapPair pair;
    pair.input_extent = E + 1;

    MapBlock n1;
    n1.name = "n1";
    n1.in_extent = E + 1;
    n1.out_extent = E + 2;
    n1.bandwidth = 1;
    n1.band = {akzb, series_mul(za, zb), akzb};
    n1.h = delta_vec(n1.out_extent, series_scale(kOne, -1.0));

    MapBlock r12;
    r12.name = "r12";
    r12.in_extent = E + 1;
    r12.out_extent = E + 1;
    r12.bandwidth = 0;
    r12.band = {kOne};
    r12.h = ExtentVector(r12.out_extent);

    MapBlock n2;
    n2.name = "n2";
    n2.in_extent = E + 1;
    n2.out_extent = E + 2;
    n2.bandwidth = 1;
    n2.band = {series_mul(zb, akzb), series_mul(za, zb2), series_mul(zb, akzb)};
    n2.h = delta_vec(n2.out_extent, series_scale(zb, -1.0));

    MapBlock r22;
    r22.name = "r22";
    r22.in_extent = E + 1;
    r22.out_extent = E + 1;
    r22.bandwidth = 0;
    r22.band = {zb};
    r22.h = ExtentVector(r22.out_extent);

    // (z - sigma)^2 has spatial kernel conv: {(ak)^2, -2 ak (z-a), (z-a)^2 + 2 (ak)^2, ...}
    MapBlock l;
    l.name = "l";
    l.in_extent = E + 1;
    l.out_extent = E + 3;
    l.bandwidth = 2;
    const LaurentSeries outer = series_scale(zb2, ak * ak);
    const LaurentSeries inner = series_scale(series_mul(za, zb2), -2.0 * ak);
    const LaurentSeries center =
        series_add(series_mul(series_mul(za, za), zb2), series_scale(zb2, 2.0 * ak * ak));
    l.band = {outer, inner, center, inner, outer};
    l.h = ExtentVector(l.out_extent);
    l.h.at(0) = series_scale(series_mul(za, zb), -1.0);
    l.h.at(-1) = series_scale(zb, ak);
    l.h.at(1) = series_scale(zb, ak);

    MapBlock m2 = n1;
    m2.name = "m2";

    pair.blocks = {n1, r12, n2, r22, l, m2};
    return pair;
}

AffineMapPair assemble_sl(const PlantParams& p, int E) {
    const AffineMapPair raw = build_sl_blocks(p, E);
    const ExtentVector g = r12_offset(p, E);

    AffineMapPair out;
    out.input_extent = E;
    for (const auto& b : raw.blocks) {
        MapBlock c;
        c.name = b.name;
        c.in_extent = E;
        c.out_extent = b.out_extent;
        c.bandwidth = b.bandwidth;
        c.band.reserve(b.band.size());
        for (const auto& e : b.band) c.band.push_back(series_shift(e, 4));
        c.h = apply_block(b, g);
        out.blocks.push_back(std::move(c));
    }

    const CausalCheck cc = causal_check(out, 1e-12);
    if (!cc.ok)
        throw InternalError("assemble_sl: assembled stack has acausal coefficient of magnitude " +
                            std::to_string(cc.worst));
    return out;
}

SlExtents sl_extents(int E) {
    return {std::max(E + 1, 2), std::max(E + 2, 3), std::max(E + 1, 2), std::max(E + 2, 3)};
}

namespace {

struct FreqSample {
    std::complex<double> r12, r11, r21, r22, m1, m2, n1, n2, l;
};

FreqSample sample_maps(const PlantParams& p, std::complex<double> f_eval, double theta,
                       std::complex<double> z) {
    const double sg = sigma_at(p, theta);
    const std::complex<double> zi = 1.0 / z;
    const std::complex<double> zs = z - sg;
    const std::complex<double> zb = z - p.beta;
    FreqSample s;
    s.r12 = zi * zi + (sg + p.beta) * zi * zi * zi + zi * zi * zi * zi * f_eval;
    s.r11 = zs * s.r12;
    s.r22 = zb * s.r12;
    s.n1 = zs * zb * s.r12 - 1.0;
    s.r21 = s.n1;
    s.m2 = s.n1;
    s.m1 = zs * zs * zb * s.r12 - zs;
    s.n2 = zs * zb * zb * s.r12 - zb;
    s.l = zs * zb * s.n1;
    return s;
}

} // namespace

std::complex<double> recover_controller_sl(const PlantParams& p, std::complex<double> f_eval,
                                           double theta, std::complex<double> z) {
    const FreqSample s = sample_maps(p, f_eval, theta, z);
    const std::complex<double> det = s.r11 * s.r22 - s.r12 * s.r21;
    if (std::abs(det) < 1e-12)
        throw NumericalError("recover_controller_sl: R is singular at the sampled (theta, z)");
    // K = l - [m1 m2] R^-1 [n1; n2]
    const std::complex<double> v1 = (s.r22 * s.n1 - s.r12 * s.n2) / det;
    const std::complex<double> v2 = (-s.r21 * s.n1 + s.r11 * s.n2) / det;
    return s.l - (s.m1 * v1 + s.m2 * v2);
}

std::complex<double> explicit_controller(const PlantParams& p, std::complex<double> f_eval,
                                         double theta, std::complex<double> z) {
    const double sg = sigma_at(p, theta);
    const std::complex<double> zb = z - p.beta;
    const std::complex<double> zs = z - sg;
    const std::complex<double> den = z * z + (sg + p.beta) * z + f_eval;
    if (std::abs(den) < 1e-12)
        throw NumericalError("explicit_controller: denominator vanishes at the sampled (theta, z)");
    const std::complex<double> num = zb * (f_eval * zs - z * sg * (sg + p.beta)) - z * z * p.beta * p.beta;
    return num / den;
}

} // namespace localsyn
