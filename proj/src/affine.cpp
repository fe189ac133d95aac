#include "localsyn/affine.hpp"

namespace localsyn {

LaurentSeries toeplitz_entry(const MapBlock& b, int r, int c) {
    const int d = r - c;
    if (d < -b.bandwidth || d > b.bandwidth) return {};
    return b.band_at(d);
}

ExtentVector apply_block(const MapBlock& b, const ExtentVector& x) {
    ExtentVector y(b.out_extent);
    for (int r = -b.out_extent; r <= b.out_extent; ++r) {
        LaurentSeries acc = b.h.at(r);
        for (int d = -b.bandwidth; d <= b.bandwidth; ++d) {
            const int c = r - d;
            if (!x.in_range(c) || c < -b.in_extent || c > b.in_extent) continue;
            acc = series_add(acc, series_mul(b.band_at(d), x.at(c)));
        }
        y.at(r) = acc;
    }
    return y;
}

int stack_rows(const AffineMapPair& p) {
    int n = 0;
    for (const auto& b : p.blocks) n += 2 * b.out_extent + 1;
    return n;
}

CausalCheck causal_check(const AffineMapPair& p, double tol) {
    CausalCheck worst;
    for (const auto& b : p.blocks) {
        for (const auto& e : b.band) {
            const CausalCheck c = causal_check(e, tol);
            if (!c.ok && (worst.ok || c.worst > worst.worst)) worst = c;
        }
        const CausalCheck c = causal_check(b.h, tol);
        if (!c.ok && (worst.ok || c.worst > worst.worst)) worst = c;
    }
    return worst;
}

} // namespace localsyn
