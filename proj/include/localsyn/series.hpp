#pragma once

// Finite Laurent series in the delay variable z^{-1}.
//
// A series is stored as a contiguous coefficient block: c[i] multiplies
// z^{-(lo+i)}.  lo may be negative, in which case the series has terms in
// positive powers of z (an acausal part).  All constructors trim
// coefficients with magnitude <= trim_eps, so an all-zero series has an
// empty coefficient vector.  Values are immutable by convention: every
// operation returns a fresh series.

#include <cmath>
#include <complex>
#include <cstdlib>
#include <vector>

namespace localsyn {

inline constexpr double trim_eps = 1e-14;

template <class T>
struct BasicSeries {
    int lo = 0;             // power of z^{-1} carried by c[0]
    std::vector<T> c;

    bool empty() const { return c.empty(); }
    int lowest_power() const { return lo; }                       // first stored delay
    int highest_power() const { return lo + int(c.size()) - 1; }  // last stored delay

    // coefficient of z^{-t}, zero outside the stored block
    T coeff(int t) const {
        const int i = t - lo;
        if (i < 0 || i >= int(c.size())) return T(0);
        return c[std::size_t(i)];
    }
};

using LaurentSeries = BasicSeries<double>;
using SpectralSeries = BasicSeries<std::complex<double>>;

// Causal impulse response: c[t] multiplies z^{-t}, t >= 0.
struct CausalSeries {
    std::vector<double> c;
};

namespace detail {
template <class T>
inline bool negligible(const T& v) {
    return std::abs(v) <= trim_eps;
}
} // namespace detail

template <class T>
BasicSeries<T> make_series(int lo, std::vector<T> c) {
    std::size_t b = 0, e = c.size();
    while (b < e && detail::negligible(c[b])) ++b;
    while (e > b && detail::negligible(c[e - 1])) --e;
    if (b == e) return {};
    std::vector<T> kept(c.begin() + long(b), c.begin() + long(e));
    return {lo + int(b), std::move(kept)};
}

inline LaurentSeries to_laurent(const CausalSeries& s) {
    return make_series(0, s.c);
}

template <class T>
BasicSeries<T> series_add(const BasicSeries<T>& a, const BasicSeries<T>& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    const int lo = std::min(a.lo, b.lo);
    const int hi = std::max(a.highest_power(), b.highest_power());
    std::vector<T> c(std::size_t(hi - lo + 1), T(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) c[std::size_t(a.lo - lo) + i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) c[std::size_t(b.lo - lo) + i] += b.c[i];
    return make_series(lo, std::move(c));
}

template <class T>
BasicSeries<T> series_neg(const BasicSeries<T>& a) {
    BasicSeries<T> r = a;
    for (auto& v : r.c) v = -v;
    return r;
}

template <class T>
BasicSeries<T> series_sub(const BasicSeries<T>& a, const BasicSeries<T>& b) {
    return series_add(a, series_neg(b));
}

template <class T, class S>
BasicSeries<T> series_scale(const BasicSeries<T>& a, S k) {
    std::vector<T> c(a.c);
    for (auto& v : c) v *= k;
    return make_series(a.lo, std::move(c));
}

// Cauchy product
template <class T>
BasicSeries<T> series_mul(const BasicSeries<T>& a, const BasicSeries<T>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<T> c(a.c.size() + b.c.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            c[i + j] += a.c[i] * b.c[j];
    return make_series(a.lo + b.lo, std::move(c));
}

// multiply by z^{-s} (s < 0 advances)
template <class T>
BasicSeries<T> series_shift(const BasicSeries<T>& a, int s) {
    BasicSeries<T> r = a;
    r.lo += s;
    return r;
}

template <class T>
std::complex<double> series_eval(const BasicSeries<T>& a, std::complex<double> z) {
    // Horner in z^{-1} from the deepest delay up, then apply the leading power
    std::complex<double> acc(0.0, 0.0);
    const std::complex<double> zi = 1.0 / z;
    for (std::size_t i = a.c.size(); i-- > 0;) acc = acc * zi + std::complex<double>(a.c[i]);
    return acc * std::pow(zi, a.lo);
}

template <class T>
double series_sumsq(const BasicSeries<T>& a) {
    double s = 0.0;
    for (const auto& v : a.c) s += std::norm(std::complex<double>(v));
    return s;
}

// Portion with terms in nonnegative powers of z^{-1}.
template <class T>
BasicSeries<T> causal_part(const BasicSeries<T>& a) {
    if (a.lo >= 0) return a;
    const int cut = std::min<int>(-a.lo, int(a.c.size()));
    std::vector<T> c(a.c.begin() + cut, a.c.end());
    return make_series(a.lo + cut, std::move(c));
}

// Portion with terms in strictly positive powers of z.
template <class T>
BasicSeries<T> acausal_part(const BasicSeries<T>& a) {
    if (a.lo >= 0) return {};
    const int cut = std::min<int>(-a.lo, int(a.c.size()));
    std::vector<T> c(a.c.begin(), a.c.begin() + cut);
    return make_series(a.lo, std::move(c));
}

struct CausalCheck {
    bool ok = true;
    double worst = 0.0;   // largest offending magnitude
    int worst_power = 0;  // power of z^{-1} where it occurs
};

// Causal: no coefficient above tol at powers z^{+1}, z^{+2}, ...
// Strict additionally requires the z^0 coefficient to vanish.
template <class T>
CausalCheck causal_check(const BasicSeries<T>& a, double tol, bool strict = false) {
    CausalCheck r;
    const int limit = strict ? 1 : 0;  // first admissible power of z^{-1}
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        const int p = a.lo + int(i);
        if (p >= limit) break;
        const double m = std::abs(std::complex<double>(a.c[i]));
        if (m > tol && m > r.worst) {
            r.ok = false;
            r.worst = m;
            r.worst_power = p;
        }
    }
    return r;
}

} // namespace localsyn
