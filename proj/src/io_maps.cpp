#include "localsyn/io_maps.hpp"

#include "localsyn/errors.hpp"
#include "localsyn/sl_maps.hpp"

namespace localsyn {

namespace {

LaurentSeries monic_minus(double c) {  // z - c
    return make_series(-1, std::vector<double>{1.0, -c});
}

const LaurentSeries kOne = make_series(0, std::vector<double>{1.0});

// spatial kernel of the operator (z - sigma): series entries per offset
ExtentVector op_z_minus_sigma(const PlantParams& p) {
    ExtentVector v(1);
    v.at(-1) = make_series(0, std::vector<double>{-p.alpha * p.kappa});
    v.at(0) = monic_minus(p.alpha);
    v.at(1) = make_series(0, std::vector<double>{-p.alpha * p.kappa});
    return v;
}

// composition of two spatially invariant operators given by kernels
ExtentVector kernel_conv(const ExtentVector& a, const ExtentVector& b) {
    ExtentVector r(a.extent + b.extent);
    for (int i = -a.extent; i <= a.extent; ++i)
        for (int j = -b.extent; j <= b.extent; ++j)
            r.at(i + j) = series_add(r.at(i + j), series_mul(a.at(i), b.at(j)));
    return r;
}

ExtentVector apply_z_minus_sigma(const PlantParams& p, const ExtentVector& v) {
    const ExtentVector op = op_z_minus_sigma(p);
    return kernel_conv(op, v);
}

MapBlock band_block(std::string name, int E, int out_extent, const ExtentVector& kernel,
                    const LaurentSeries& entry_factor) {
    MapBlock b;
    b.name = std::move(name);
    b.in_extent = E + 1;
    b.out_extent = out_extent;
    b.bandwidth = kernel.extent;
    for (int d = -kernel.extent; d <= kernel.extent; ++d)
        b.band.push_back(series_mul(kernel.at(d), entry_factor));
    b.h = ExtentVector(out_extent);
    return b;
}

} // namespace

ExtentVector build_lambda(const PlantParams& p, const ExtentVector& f) {
    // identical decomposition to the r12 route, under its own name
    return build_r12(p, f);
}

IoFreqMaps io_freq_maps(const PlantParams& p, double theta, const LaurentSeries& lambda) {
    IoFreqMaps m;
    m.theta = theta;
    m.sigma = sigma_at(p, theta);
    const LaurentSeries zs = monic_minus(m.sigma);
    const LaurentSeries zb = monic_minus(p.beta);
    const LaurentSeries zszb = series_mul(zs, zb);
    m.lambda = lambda;
    m.gamma = series_mul(zszb, lambda);
    m.omega = m.gamma;
    const LaurentSeries gm1 = series_sub(m.gamma, kOne);
    m.psi = series_mul(zszb, gm1);
    m.x2_wy = series_mul(zb, gm1);
    m.x2_wu = series_mul(zb, lambda);
    return m;
}

IoIndexMaps io_index_maps(const PlantParams& p, const ExtentVector& lambda) {
    IoIndexMaps m;
    const LaurentSeries zb = monic_minus(p.beta);
    m.lambda = lambda;
    m.gamma = apply_z_minus_sigma(p, vec_mul_series(lambda, zb));
    m.omega = m.gamma;
    ExtentVector gm1 = m.gamma;
    gm1.at(0) = series_sub(gm1.at(0), kOne);
    m.psi = apply_z_minus_sigma(p, vec_mul_series(gm1, zb));
    m.x2_wy = vec_mul_series(gm1, zb);
    m.x2_wu = vec_mul_series(lambda, zb);
    return m;
}

AffineMapPair build_io_blocks(const PlantParams& p, int E) {
    const LaurentSeries zb = monic_minus(p.beta);
    const LaurentSeries zb2 = series_mul(zb, zb);
    const ExtentVector op1 = op_z_minus_sigma(p);
    const ExtentVector op2 = kernel_conv(op1, op1);

    ExtentVector ident(0);
    ident.at(0) = kOne;

    AffineMapPair pair;
    pair.input_extent = E + 1;

    MapBlock gamma = band_block("gamma", E, E + 2, op1, zb);
    gamma.h.at(0) = series_scale(kOne, -1.0);  // gamma - 1

    MapBlock lambda = band_block("lambda", E, E + 1, ident, kOne);

    MapBlock x2_wy = band_block("x2_wy", E, E + 2, op1, zb2);
    x2_wy.h.at(0) = series_scale(zb, -1.0);  // (z - beta)(gamma - 1)

    MapBlock x2_wu = band_block("x2_wu", E, E + 1, ident, zb);

    MapBlock psi = band_block("psi", E, E + 3, op2, zb2);
    for (int d = -1; d <= 1; ++d)
        psi.h.at(d) = series_scale(series_mul(op1.at(d), zb), -1.0);

    MapBlock omega = band_block("omega", E, E + 2, op1, zb);
    omega.h.at(0) = series_scale(kOne, -1.0);  // omega - 1

    pair.blocks = {gamma, lambda, x2_wy, x2_wu, psi, omega};
    return pair;
}

AffineMapPair assemble_io(const PlantParams& p, int E) {
    const AffineMapPair raw = build_io_blocks(p, E);
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
        throw InternalError("assemble_io: assembled stack has acausal coefficient of magnitude " +
                            std::to_string(cc.worst));
    return out;
}

IoExtents io_extents(int E) {
    return {std::max(E + 1, 2), std::max(E, 1), std::max(E + 2, 3), std::max(E + 1, 2)};
}

std::complex<double> recover_controller_io(const PlantParams& p, std::complex<double> f_eval,
                                           double theta, std::complex<double> z) {
    const double sg = sigma_at(p, theta);
    const std::complex<double> zi = 1.0 / z;
    const std::complex<double> lam = zi * zi + (sg + p.beta) * zi * zi * zi + zi * zi * zi * zi * f_eval;
    const std::complex<double> zszb = (z - sg) * (z - p.beta);
    const std::complex<double> gamma = zszb * lam;
    if (std::abs(gamma) < 1e-12)
        throw NumericalError("recover_controller_io: Gamma vanishes at the sampled (theta, z)");
    const std::complex<double> psi = zszb * (gamma - 1.0);
    return psi / gamma;
}

} // namespace localsyn
