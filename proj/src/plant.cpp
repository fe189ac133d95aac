#include "localsyn/plant.hpp"

#include <cmath>

namespace localsyn {

double sigma_at(const PlantParams& p, double theta) {
    return p.alpha * (1.0 + 2.0 * p.kappa * std::cos(theta));
}

ExtentVector sigma_kernel(const PlantParams& p) {
    ExtentVector v(1);
    v.at(-1) = make_series(0, std::vector<double>{p.alpha * p.kappa});
    v.at(0) = make_series(0, std::vector<double>{p.alpha});
    v.at(1) = make_series(0, std::vector<double>{p.alpha * p.kappa});
    return v;
}

ExtentVector apply_sigma(const PlantParams& p, const ExtentVector& v) {
    ExtentVector r(v.extent + 1);
    const double ak = p.alpha * p.kappa;
    for (int k = -v.extent; k <= v.extent; ++k) {
        const LaurentSeries& e = v.at(k);
        if (e.empty()) continue;
        r.at(k) = series_add(r.at(k), series_scale(e, p.alpha));
        r.at(k - 1) = series_add(r.at(k - 1), series_scale(e, ak));
        r.at(k + 1) = series_add(r.at(k + 1), series_scale(e, ak));
    }
    return r;
}

FrequencyPlant build_freq_plant(const PlantParams& p, double theta) {
    FrequencyPlant f;
    f.theta = theta;
    f.sigma = sigma_at(p, theta);
    f.A << p.beta, 1.0,
           0.0, f.sigma;
    // disturbance vector is (w^y, w^x): noise on the measurement, then on x2
    f.B1 << 0.0, 0.0,
            0.0, 1.0;
    f.B2 << 0.0, 1.0;
    f.C1 << 1.0, 0.0,
            0.0, 1.0,
            0.0, 0.0;
    f.D11.setZero();
    f.D12 << 0.0, 0.0, 1.0;
    f.C2 << 1.0, 0.0;   // the measurement reads the first state
    f.D21 << 1.0, 0.0;
    f.D22 = 0.0;
    return f;
}

std::vector<std::string> stability_notes(const PlantParams& p) {
    std::vector<std::string> notes;
    if (std::abs(p.beta) > 1.0)
        notes.push_back("open-loop unstable: |beta| = " + std::to_string(std::abs(p.beta)) + " > 1");
    const double smax = std::abs(p.alpha) * (1.0 + 2.0 * std::abs(p.kappa));
    if (smax > 1.0)
        notes.push_back("open-loop unstable: max |sigma(theta)| = " + std::to_string(smax) + " > 1");
    return notes;
}

} // namespace localsyn
