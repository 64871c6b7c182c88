#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "pintswe/reference.hpp"
#include "pintswe/swe.hpp"
#include "pintswe/transform.hpp"
#include "support.hpp"

using namespace pintswe;
using testsupport::random_field;
using testsupport::random_state;
using testsupport::rel_diff;

namespace {

ModelParams unit_params(double nu) {
    ModelParams p;
    p.radius = 1.0;
    p.omega = 1.0;
    p.gravity = 1.0;
    p.phi_bar = 1.0;
    p.nu = nu;
    return p;
}

/// Random state whose spectrum decays fast enough that quadratic products
/// stay essentially inside the truncation.
PrognosticState smooth_state(int truncation, const ModelParams& p, unsigned seed) {
    PrognosticState s = random_state(truncation, seed);
    for (int r = 0; r <= truncation; ++r)
        for (int v = r; v <= truncation; ++v) {
            const double decay = std::exp(-std::pow(v / 3.0, 2));
            s.phi.at(r, v) *= 1.0e4 * decay;
            s.vort.at(r, v) *= 1.0e-5 * decay;
            s.div.at(r, v) *= 1.0e-6 * decay;
        }
    s.vort.at(0, 0) = 0.0;
    s.div.at(0, 0) = 0.0;
    s.phi.at(0, 0) = p.phi_bar * std::sqrt(2.0);  // mean geopotential
    return s;
}

}  // namespace

TEST_CASE("linear operator tendencies") {
    const int R = 6;
    SUBCASE("zero state gives zero tendency") {
        ModelParams p;
        p.nu = 1e5;
        const PrognosticState out = eval_linear(PrognosticState(R), p);
        CHECK(out.max_abs() == 0.0);
    }
    SUBCASE("divergence mode forces the geopotential") {
        ModelParams p = unit_params(0.0);
        p.phi_bar = 12345.0;
        PrognosticState s(R);
        s.div.at(0, 2) = 1.0;
        PrognosticState out = eval_linear(s, p);
        CHECK(out.phi.at(0, 2).real() == doctest::Approx(-12345.0));
        out.phi.at(0, 2) = 0.0;
        CHECK(out.max_abs() == 0.0);
    }
    SUBCASE("geopotential mode forces the divergence via -lap") {
        ModelParams p = unit_params(0.0);
        PrognosticState s(R);
        s.phi.at(1, 3) = 1.0;
        const PrognosticState out = eval_linear(s, p);
        CHECK(out.div.at(1, 3).real() == doctest::Approx(12.0));
    }
}

TEST_CASE("nonlinear operator basics") {
    const int R = 15;
    TransformPlan plan(R);
    ModelParams p;
    p.nu = 1e5;

    SUBCASE("state at rest has zero nonlinear tendency") {
        PrognosticState s(R);
        s.phi = random_field(R, 5);
        s.phi *= 1e3;
        s.phi.at(0, 0) += p.phi_bar * std::sqrt(2.0);
        const PrognosticState out = eval_nonlinear(s, p, plan);
        CHECK(out.max_abs() < 1e-12 * s.phi.max_abs());
    }
    SUBCASE("global means of the tendencies vanish identically") {
        const PrognosticState s = smooth_state(R, p, 17);
        const PrognosticState nl = eval_nonlinear(s, p, plan);
        const PrognosticState li = eval_linear(s, p);
        CHECK(nl.phi.at(0, 0) == std::complex<double>(0.0, 0.0));
        CHECK(nl.div.at(0, 0) == std::complex<double>(0.0, 0.0));
        CHECK(li.phi.at(0, 0) == std::complex<double>(0.0, 0.0));
        CHECK(li.div.at(0, 0) == std::complex<double>(0.0, 0.0));
    }
    SUBCASE("quadratic smallness in the flow amplitude") {
        // With Phi' and the winds scaled together, halving the amplitude
        // quarters the Phi tendency.
        PrognosticState s(R);
        s.phi = random_field(R, 31);
        s.vort = random_field(R, 32);
        s.div = random_field(R, 33);
        for (int r = 0; r <= R; ++r)
            for (int v = r; v <= R; ++v) {
                const double decay = std::exp(-std::pow(v / 3.0, 2));
                s.phi.at(r, v) *= decay;
                s.vort.at(r, v) *= 1e-6 * decay;
                s.div.at(r, v) *= 1e-6 * decay;
            }
        s.vort.at(0, 0) = 0.0;
        s.div.at(0, 0) = 0.0;
        ModelParams q = p;
        q.omega = 0.0;  // the Coriolis term is linear in the winds, exclude it
        q.nu = 0.0;
        PrognosticState half = s;
        half *= 0.5;
        const double n1 = eval_nonlinear(s, q, plan).phi.max_abs();
        const double n2 = eval_nonlinear(half, q, plan).phi.max_abs();
        CHECK(n1 / n2 == doctest::Approx(4.0).epsilon(0.05));
    }
    SUBCASE("imex split composes the two evaluators") {
        const PrognosticState s = smooth_state(R, p, 51);
        const auto [fi, fe] = imex_split(s, p, plan);
        CHECK(rel_diff(fi, eval_linear(s, p)) == 0.0);
        CHECK(rel_diff(fe, eval_nonlinear(s, p, plan)) == 0.0);
    }
}

TEST_CASE("implicit solve") {
    const int R = 10;
    SUBCASE("c = 0 returns b unchanged") {
        ModelParams p = unit_params(1.0);
        const PrognosticState b = random_state(R, 3);
        CHECK(rel_diff(solve_implicit(b, 0.0, p), b) == 0.0);
    }
    SUBCASE("pure diffusion solve on a vorticity mode") {
        ModelParams p = unit_params(1.0);
        PrognosticState b(R);
        b.vort.at(0, 2) = 1.0;
        const PrognosticState x = solve_implicit(b, 1.0, p);
        CHECK(x.vort.at(0, 2).real() == doctest::Approx(1.0 / 7.0).epsilon(1e-15));
    }
    SUBCASE("residual oracle, unit constants") {
        for (double nu : {0.0, 1.0}) {
            ModelParams p = unit_params(nu);
            for (double c : {1e-3, 0.3, 1.0, 1e3}) {
                const PrognosticState b = random_state(R, 7 + static_cast<unsigned>(c * 10));
                const PrognosticState x = solve_implicit(b, c, p);
                PrognosticState res = x;
                res.axpy(-c, eval_linear(x, p));
                res -= b;
                CHECK(res.max_abs() < 1e-12 * b.max_abs());
            }
        }
    }
    SUBCASE("residual oracle, earth constants and physical scales") {
        ModelParams p;
        p.nu = 1e5;
        const PrognosticState b = random_state(R, 77, 0.1 * p.phi_bar, 1e-5);
        for (double c : {0.3, 50.0, 400.0}) {
            const PrognosticState x = solve_implicit(b, c, p);
            PrognosticState res = x;
            res.axpy(-c, eval_linear(x, p));
            res -= b;
            CHECK(res.max_abs() < 1e-12 * b.max_abs());
        }
    }
}

// ---------------------------------------------------------------------------
// Splitting completeness: F_I + F_E against an independent finite-difference
// evaluator of the vorticity-divergence equations on a fine uniform grid.
// ---------------------------------------------------------------------------

namespace {

struct FdGrid {
    int nlat = 384;
    int nlon = 768;
    std::vector<double> lat;  // uniform latitudes, offset from the poles
    std::vector<double> mu;

    FdGrid() {
        lat.resize(nlat);
        mu.resize(nlat);
        for (int i = 0; i < nlat; ++i) {
            lat[i] = -0.5 * M_PI + (i + 0.5) * M_PI / nlat;
            mu[i] = std::sin(lat[i]);
        }
    }
    double dphi() const { return M_PI / nlat; }
    double dlam() const { return 2.0 * M_PI / nlon; }
};

using Field = std::vector<double>;  // nlat x nlon row-major

// 8th-order centered first derivative.
constexpr double kC1 = 4.0 / 5.0, kC2 = -1.0 / 5.0, kC3 = 4.0 / 105.0, kC4 = -1.0 / 280.0;

Field d_lambda(const FdGrid& g, const Field& f) {
    Field out(f.size(), 0.0);
    for (int i = 0; i < g.nlat; ++i) {
        const double* row = f.data() + static_cast<std::size_t>(i) * g.nlon;
        double* orow = out.data() + static_cast<std::size_t>(i) * g.nlon;
        for (int j = 0; j < g.nlon; ++j) {
            auto at = [&](int k) { return row[((j + k) % g.nlon + g.nlon) % g.nlon]; };
            orow[j] = (kC1 * (at(1) - at(-1)) + kC2 * (at(2) - at(-2)) + kC3 * (at(3) - at(-3)) +
                       kC4 * (at(4) - at(-4))) /
                      g.dlam();
        }
    }
    return out;
}

// Valid on rows 4 .. nlat-5 only; edge rows are left zero.
Field d_phi(const FdGrid& g, const Field& f) {
    Field out(f.size(), 0.0);
    for (int i = 4; i < g.nlat - 4; ++i) {
        for (int j = 0; j < g.nlon; ++j) {
            auto at = [&](int k) { return f[static_cast<std::size_t>(i + k) * g.nlon + j]; };
            out[static_cast<std::size_t>(i) * g.nlon + j] =
                (kC1 * (at(1) - at(-1)) + kC2 * (at(2) - at(-2)) + kC3 * (at(3) - at(-3)) +
                 kC4 * (at(4) - at(-4))) /
                g.dphi();
        }
    }
    return out;
}

Field scale_by_cos(const FdGrid& g, const Field& f) {
    Field out(f.size());
    for (int i = 0; i < g.nlat; ++i) {
        const double c = std::cos(g.lat[i]);
        for (int j = 0; j < g.nlon; ++j) {
            const std::size_t k = static_cast<std::size_t>(i) * g.nlon + j;
            out[k] = f[k] * c;
        }
    }
    return out;
}

Field div_fd(const FdGrid& g, const Field& a, const Field& b, double radius) {
    const Field da = d_lambda(g, a);
    const Field db = d_phi(g, scale_by_cos(g, b));
    Field out(a.size(), 0.0);
    for (int i = 0; i < g.nlat; ++i) {
        const double fac = 1.0 / (radius * std::cos(g.lat[i]));
        for (int j = 0; j < g.nlon; ++j) {
            const std::size_t k = static_cast<std::size_t>(i) * g.nlon + j;
            out[k] = fac * (da[k] + db[k]);
        }
    }
    return out;
}

Field curl_fd(const FdGrid& g, const Field& a, const Field& b, double radius) {
    const Field db = d_lambda(g, b);
    const Field da = d_phi(g, scale_by_cos(g, a));
    Field out(a.size(), 0.0);
    for (int i = 0; i < g.nlat; ++i) {
        const double fac = 1.0 / (radius * std::cos(g.lat[i]));
        for (int j = 0; j < g.nlon; ++j) {
            const std::size_t k = static_cast<std::size_t>(i) * g.nlon + j;
            out[k] = fac * (db[k] - da[k]);
        }
    }
    return out;
}

Field lap_fd(const FdGrid& g, const Field& f, double radius) {
    const Field dll = d_lambda(g, d_lambda(g, f));
    const Field dpp = d_phi(g, scale_by_cos(g, d_phi(g, f)));
    Field out(f.size(), 0.0);
    for (int i = 0; i < g.nlat; ++i) {
        const double c = std::cos(g.lat[i]);
        for (int j = 0; j < g.nlon; ++j) {
            const std::size_t k = static_cast<std::size_t>(i) * g.nlon + j;
            out[k] = (dll[k] / (c * c) + dpp[k] / c) / (radius * radius);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("splitting completeness against a finite-difference oracle") {
    const int R = 15;
    TransformPlan plan(R);
    ModelParams p;
    p.nu = 1e5;
    const PrognosticState s = smooth_state(R, p, 99);

    // Spectral-path tendency.
    PrognosticState tend = eval_linear(s, p);
    tend += eval_nonlinear(s, p, plan);

    // Evaluate all fields on the oracle grid.
    const FdGrid g;
    Field u, v;
    reference::uv(s.vort, s.div, p.radius, g.mu, g.nlon, u, v);
    const Field phi = reference::synthesise(s.phi, g.mu, g.nlon);
    const Field vort = reference::synthesise(s.vort, g.mu, g.nlon);
    const Field div = reference::synthesise(s.div, g.mu, g.nlon);
    const Field t_phi = reference::synthesise(tend.phi, g.mu, g.nlon);
    const Field t_vort = reference::synthesise(tend.vort, g.mu, g.nlon);
    const Field t_div = reference::synthesise(tend.div, g.mu, g.nlon);

    // Finite-difference tendencies of the full equations.
    const std::size_t n = phi.size();
    Field fu(n), fv(n), qu(n), qv(n), ke_plus_phi(n);
    for (int i = 0; i < g.nlat; ++i) {
        const double f = 2.0 * p.omega * g.mu[i];
        for (int j = 0; j < g.nlon; ++j) {
            const std::size_t k = static_cast<std::size_t>(i) * g.nlon + j;
            fu[k] = (phi[k] - p.phi_bar) * u[k];
            fv[k] = (phi[k] - p.phi_bar) * v[k];
            qu[k] = (vort[k] + f) * u[k];
            qv[k] = (vort[k] + f) * v[k];
            ke_plus_phi[k] = 0.5 * (u[k] * u[k] + v[k] * v[k]) + phi[k];
        }
    }
    const Field dphi_fd = div_fd(g, fu, fv, p.radius);
    const Field lap_phi = lap_fd(g, phi, p.radius);
    const Field dvort_fd = div_fd(g, qu, qv, p.radius);
    const Field lap_vort = lap_fd(g, vort, p.radius);
    const Field curl_q = curl_fd(g, qu, qv, p.radius);
    const Field lap_ke_phi = lap_fd(g, ke_plus_phi, p.radius);
    const Field lap_div = lap_fd(g, div, p.radius);

    // Compare away from the poles where every stencil row is valid.
    double max_phi = 0, max_vort = 0, max_div = 0;
    double err_phi = 0, err_vort = 0, err_div = 0;
    for (int i = 0; i < g.nlat; ++i) {
        if (std::abs(g.lat[i]) > M_PI / 3.0) continue;
        for (int j = 0; j < g.nlon; ++j) {
            const std::size_t k = static_cast<std::size_t>(i) * g.nlon + j;
            const double f_phi = -dphi_fd[k] - p.phi_bar * div[k] + p.nu * lap_phi[k];
            const double f_vort = -dvort_fd[k] + p.nu * lap_vort[k];
            const double f_div = curl_q[k] - lap_ke_phi[k] + p.nu * lap_div[k];
            max_phi = std::max(max_phi, std::abs(t_phi[k]));
            max_vort = std::max(max_vort, std::abs(t_vort[k]));
            max_div = std::max(max_div, std::abs(t_div[k]));
            err_phi = std::max(err_phi, std::abs(f_phi - t_phi[k]));
            err_vort = std::max(err_vort, std::abs(f_vort - t_vort[k]));
            err_div = std::max(err_div, std::abs(f_div - t_div[k]));
        }
    }
    CHECK(err_phi / max_phi < 1e-6);
    CHECK(err_vort / max_vort < 1e-6);
    CHECK(err_div / max_div < 1e-6);
}
