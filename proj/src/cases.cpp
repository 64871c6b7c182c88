#include "pintswe/cases.hpp"

#include <cmath>
#include <functional>

namespace pintswe::cases {

namespace {

double simpson_adaptive(const std::function<double(double)>& f, double a, double b, double fa,
                        double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson_adaptive(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_adaptive(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    if (a == b) return 0.0;
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_adaptive(f, a, b, fa, fm, fb, whole, tol, 48);
}

// Spherical mean of a grid field: (1 / 4 pi) integral over the sphere.
double spherical_mean(const GridField& g) {
    double acc = 0.0;
    for (int i = 0; i < g.nlat; ++i) {
        double row = 0.0;
        for (int j = 0; j < g.nlon; ++j) row += g.at(i, j);
        acc += g.latitudes->weight[i] * row;
    }
    return acc / (2.0 * g.nlon);
}

}  // namespace

PrognosticState init_gaussian_dome(const TransformPlan& plan, const ModelParams& p,
                                   const GaussianDomeParams& gp) {
    GridField h = plan.make_grid();
    const auto& mu = plan.latitudes().mu;
    const double xc = std::cos(gp.lon_center) * std::cos(gp.lat_center);
    const double yc = std::sin(gp.lon_center) * std::cos(gp.lat_center);
    const double zc = std::sin(gp.lat_center);
    for (int i = 0; i < plan.nlat(); ++i) {
        const double sphi = mu[i];
        const double cphi = std::sqrt(1.0 - sphi * sphi);
        for (int j = 0; j < plan.nlon(); ++j) {
            const double lam = 2.0 * M_PI * j / plan.nlon();
            const double dx = std::cos(lam) * cphi - xc;
            const double dy = std::sin(lam) * cphi - yc;
            const double dz = sphi - zc;
            const double d2 = dx * dx + dy * dy + dz * dz;  // (d / a)^2
            h.at(i, j) = gp.h_mean + gp.amplitude * std::exp(-gp.width * d2);
        }
    }
    GridField phi = h;
    for (double& v : phi.values) v *= p.gravity;

    PrognosticState state(plan.truncation());
    state.phi = plan.analyse(phi);
    return state;  // u = v = 0, so vorticity and divergence vanish
}

PrognosticState init_rossby_haurwitz(const TransformPlan& plan, const ModelParams& p,
                                     const RossbyHaurwitzParams& rp) {
    const double w = rp.omega_wave, K = rp.omega_wave;
    const int m = rp.wavenumber;
    const double a = p.radius, Om = p.omega;

    GridField vort = plan.make_grid(), phi = plan.make_grid();
    const auto& mu = plan.latitudes().mu;
    for (int i = 0; i < plan.nlat(); ++i) {
        const double sphi = mu[i];
        const double c = std::sqrt(1.0 - sphi * sphi);  // cos(phi)
        const double cm = std::pow(c, m);
        const double A = 0.5 * w * (2.0 * Om + w) * c * c +
                         0.25 * K * K * cm * cm *
                             ((m + 1.0) * c * c + (2.0 * m * m - m - 2.0) - 2.0 * m * m / (c * c));
        const double B = (2.0 * (Om + w) * K) / ((m + 1.0) * (m + 2.0)) * cm *
                         ((m * m + 2.0 * m + 2.0) - (m + 1.0) * (m + 1.0) * c * c);
        const double C = 0.25 * K * K * cm * cm * ((m + 1.0) * c * c - (m + 2.0));
        for (int j = 0; j < plan.nlon(); ++j) {
            const double lam = 2.0 * M_PI * j / plan.nlon();
            vort.at(i, j) = 2.0 * w * sphi - K * sphi * cm * (m * m + 3.0 * m + 2.0) * std::cos(m * lam);
            phi.at(i, j) = p.gravity * rp.h0 +
                           a * a * (A + B * std::cos(m * lam) + C * std::cos(2.0 * m * lam));
        }
    }
    PrognosticState state(plan.truncation());
    state.vort = plan.analyse(vort);
    state.phi = plan.analyse(phi);
    return state;  // non-divergent by construction
}

PrognosticState init_galewsky(const TransformPlan& plan, const ModelParams& p,
                              const GalewskyParams& gp) {
    const double en = std::exp(-4.0 / ((gp.lat1 - gp.lat0) * (gp.lat1 - gp.lat0)));
    auto jet_u = [&](double phi_lat) {
        if (phi_lat <= gp.lat0 || phi_lat >= gp.lat1) return 0.0;
        return gp.u_max / en * std::exp(1.0 / ((phi_lat - gp.lat0) * (phi_lat - gp.lat1)));
    };
    // d(g h)/d(phi) = -a u (f + u tan(phi) / a)
    auto dgh = [&](double phi_lat) {
        const double u = jet_u(phi_lat);
        if (u == 0.0) return 0.0;
        const double f = 2.0 * p.omega * std::sin(phi_lat);
        return -p.radius * u * (f + u * std::tan(phi_lat) / p.radius);
    };

    const auto& mu = plan.latitudes().mu;
    const int nlat = plan.nlat();

    // Cumulative balanced geopotential at the Gaussian latitudes, integrating
    // northward from the jet's south edge (the integrand vanishes below it).
    std::vector<double> gh(nlat, 0.0);
    double acc = 0.0;
    double prev = gp.lat0;
    for (int i = 0; i < nlat; ++i) {
        const double phi_lat = std::asin(mu[i]);
        if (phi_lat > gp.lat0) {
            acc += integrate(dgh, prev, std::min(phi_lat, gp.lat1), 1e-10 * p.gravity * gp.h_mean);
            prev = std::min(phi_lat, gp.lat1);
        }
        gh[i] = acc;
    }

    GridField u = plan.make_grid(), v = plan.make_grid(), phi = plan.make_grid();
    for (int i = 0; i < nlat; ++i) {
        const double phi_lat = std::asin(mu[i]);
        const double uj = jet_u(phi_lat);
        for (int j = 0; j < plan.nlon(); ++j) {
            u.at(i, j) = uj;
            phi.at(i, j) = gh[i];
        }
    }
    // Fix the integration constant: global mean depth equals h_mean.
    const double shift = p.gravity * gp.h_mean - spherical_mean(phi);
    for (double& x : phi.values) x += shift;

    // Geopotential perturbation that triggers the instability.
    if (gp.h_pert != 0.0) {
        for (int i = 0; i < nlat; ++i) {
            const double phi_lat = std::asin(mu[i]);
            const double cphi = std::cos(phi_lat);
            const double merid = std::exp(-std::pow((gp.lat2 - phi_lat) / gp.bump_beta, 2));
            for (int j = 0; j < plan.nlon(); ++j) {
                double lam = 2.0 * M_PI * j / plan.nlon();
                if (lam > M_PI) lam -= 2.0 * M_PI;  // bump centered at lambda = 0
                phi.at(i, j) += p.gravity * gp.h_pert * cphi *
                                std::exp(-std::pow(lam / gp.bump_alpha, 2)) * merid;
            }
        }
    }

    PrognosticState state(plan.truncation());
    auto [vort, div] = plan.vortdiv_from_uv(u, v, p.radius);
    (void)div;  // zonal flow: the divergence analysis is identically zero
    state.vort = std::move(vort);
    state.phi = plan.analyse(phi);
    return state;
}

}  // namespace pintswe::cases
