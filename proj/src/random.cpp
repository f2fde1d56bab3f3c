#include "fleetmaint/random.hpp"

#include <cmath>
#include <stdexcept>

namespace fleetmaint {

double sample_gamma(double mean, double cv, RngStream& rng) {
    if (!(mean > 0.0) || !std::isfinite(mean)) throw std::invalid_argument("sample_gamma: mean must be > 0");
    if (!(cv >= 0.0 && cv < 1.0)) throw std::invalid_argument("sample_gamma: cv must be in [0,1)");
    if (cv == 0.0) return mean;
    const double shape = 1.0 / (cv * cv);
    const double scale = mean * cv * cv;
    std::gamma_distribution<double> gamma(shape, scale);
    // shape > 1 here, so a zero draw only happens through underflow
    double x = gamma(rng);
    while (x <= 0.0) x = gamma(rng);
    return x;
}

double sample_truncated_normal(double mu, double sigma, double lower, RngStream& rng) {
    if (!(sigma >= 0.0)) throw std::invalid_argument("sample_truncated_normal: sigma must be >= 0");
    if (sigma == 0.0) {
        if (mu < lower) throw std::invalid_argument("sample_truncated_normal: empty support (sigma = 0, mu < lower)");
        return mu;
    }
    const double a = (lower - mu) / sigma;  // standardized truncation point
    if (a < 0.5) {
        // plain rejection; acceptance >= 1 - Phi(0.5) ~ 0.31
        std::normal_distribution<double> normal(0.0, 1.0);
        for (;;) {
            const double z = normal(rng);
            if (z >= a) return mu + sigma * z;
        }
    }
    // Robert (1995) exponential proposal for deep tails.
    const double rate = 0.5 * (a + std::sqrt(a * a + 4.0));
    std::exponential_distribution<double> expo(rate);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (;;) {
        const double z = a + expo(rng);
        const double rho = std::exp(-0.5 * (z - rate) * (z - rate));
        if (unif(rng) <= rho) return mu + sigma * z;
    }
}

}  // namespace fleetmaint
