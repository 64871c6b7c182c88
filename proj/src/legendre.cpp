#include "pintswe/legendre.hpp"

#include <cmath>

namespace pintswe {

double legendre_eps(int r, int s) {
    if (s <= r) return 0.0;
    const double sd = s, rd = r;
    return std::sqrt((sd * sd - rd * rd) / (4.0 * sd * sd - 1.0));
}

namespace {

// log of the sectoral amplitude: P^r_r(mu) = exp(log_amp(r)) * cos(phi)^r.
double sectoral_log_amplitude(int r) {
    double acc = 0.5 * std::log(0.5);
    for (int k = 1; k <= r; ++k) acc += 0.5 * std::log((2.0 * k + 1.0) / (2.0 * k));
    return acc;
}

}  // namespace

void legendre_column(int r, int smax, double mu, double* out) {
    const double cos2 = 1.0 - mu * mu;
    const double log_seed = sectoral_log_amplitude(r) + 0.5 * r * std::log(cos2);
    double pmm = std::exp(log_seed);  // underflows to 0 harmlessly near the poles
    out[0] = pmm;
    if (smax == r) return;
    double prev = 0.0;   // P^r_{s-1}
    double curr = pmm;   // P^r_s
    for (int s = r; s < smax; ++s) {
        const double next = (mu * curr - legendre_eps(r, s) * prev) / legendre_eps(r, s + 1);
        out[s + 1 - r] = next;
        prev = curr;
        curr = next;
    }
}

}  // namespace pintswe
