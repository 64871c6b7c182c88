#include "pintswe/gauss.hpp"

#include <cmath>
#include <stdexcept>

namespace pintswe {

namespace {

// Evaluates P_n(x) and its derivative by the standard three-term recurrence.
void legendre_pn(int n, double x, double& p, double& dp) {
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    p = p1;
    dp = n * (x * p1 - p0) / (x * x - 1.0);
}

}  // namespace

GaussLatitudes gauss_latitudes(int n) {
    if (n < 1) throw std::invalid_argument("gauss_latitudes: need n >= 1");
    GaussLatitudes g;
    g.mu.resize(n);
    g.weight.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi-style initial guess for the i-th root (descending order).
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double p = 0.0, dp = 1.0;
        for (int it = 0; it < 100; ++it) {
            legendre_pn(n, x, p, dp);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        legendre_pn(n, x, p, dp);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        // Store ascending; exploit the symmetry of the roots.
        g.mu[n - 1 - i] = x;
        g.mu[i] = -x;
        g.weight[n - 1 - i] = w;
        g.weight[i] = w;
    }
    if (n % 2 == 1) g.mu[n / 2] = 0.0;
    return g;
}

}  // namespace pintswe
