#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pintswe/legendre.hpp"
#include "pintswe/multilevel.hpp"
#include "pintswe/reference.hpp"
#include "pintswe/transform.hpp"
#include "support.hpp"

using namespace pintswe;
using testsupport::random_field;
using testsupport::rel_diff;

TEST_CASE("Gauss-Legendre nodes and weights") {
    for (int n : {8, 24, 48}) {
        const auto g = gauss_latitudes(n);
        double wsum = 0.0;
        for (int i = 0; i < n; ++i) {
            CHECK(g.weight[i] > 0.0);
            wsum += g.weight[i];
            if (i > 0) CHECK(g.mu[i] > g.mu[i - 1]);
        }
        CHECK(wsum == doctest::Approx(2.0).epsilon(1e-12));
        // mu integrates to zero, mu^2 to 2/3 (exact for the rule).
        double m1 = 0.0, m2 = 0.0;
        for (int i = 0; i < n; ++i) {
            m1 += g.weight[i] * g.mu[i];
            m2 += g.weight[i] * g.mu[i] * g.mu[i];
        }
        CHECK(std::abs(m1) < 1e-14);
        CHECK(m2 == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
    }
}

TEST_CASE("Legendre orthonormality under Gaussian quadrature") {
    const int R = 15;
    TransformPlan plan(R);
    const auto& lats = plan.latitudes();
    for (int r = 0; r <= R; ++r) {
        for (int s = r; s <= R; ++s) {
            for (int s2 = r; s2 <= R; ++s2) {
                double acc = 0.0;
                for (int i = 0; i < plan.nlat(); ++i)
                    acc += lats.weight[i] * plan.legendre_row(r, i)[s - r] *
                           plan.legendre_row(r, i)[s2 - r];
                CHECK(std::abs(acc - (s == s2 ? 1.0 : 0.0)) < 1e-10);
            }
        }
    }
}

TEST_CASE("constant field analyses to the (0,0) mode") {
    TransformPlan plan(10);
    GridField g = plan.make_grid();
    const double c = 3.25;
    for (double& v : g.values) v = c;
    const SpectralField x = plan.analyse(g);
    // P^0_0 = sqrt(1/2), so the projection of a constant is c / sqrt(1/2).
    CHECK(x.at(0, 0).real() == doctest::Approx(c * std::sqrt(2.0)).epsilon(1e-13));
    CHECK(std::abs(x.at(0, 0).imag()) < 1e-14);
    for (int r = 0; r <= 10; ++r)
        for (int s = r; s <= 10; ++s)
            if (!(r == 0 && s == 0)) CHECK(std::abs(x.at(r, s)) < 1e-12 * c);
}

TEST_CASE("unit coefficient round trip and synthesis shapes") {
    const int R = 8;
    TransformPlan plan(R);

    SUBCASE("zero coefficients give a zero grid") {
        const GridField g = plan.synthesise(SpectralField(R));
        CHECK(g.max_abs() == 0.0);
    }
    SUBCASE("single (0,0) coefficient gives a constant grid") {
        SpectralField x(R);
        x.at(0, 0) = 2.0;
        const GridField g = plan.synthesise(x);
        for (double v : g.values)
            CHECK(v == doctest::Approx(2.0 * std::sqrt(0.5)).epsilon(1e-13));
    }
    SUBCASE("delta coefficient at (2,3) survives the round trip") {
        SpectralField x(R);
        x.at(2, 3) = {1.0, 0.0};
        const SpectralField back = plan.analyse(plan.synthesise(x));
        CHECK(std::abs(back.at(2, 3) - x.at(2, 3)) < 1e-12);
        for (int r = 0; r <= R; ++r)
            for (int s = r; s <= R; ++s)
                if (!(r == 2 && s == 3)) CHECK(std::abs(back.at(r, s)) < 1e-10);
    }
    SUBCASE("single (1,1) coefficient: cos(phi) profile with one zonal oscillation") {
        SpectralField x(R);
        x.at(1, 1) = {1.0, 0.0};
        const GridField g = plan.synthesise(x);
        // 2 Re(P^1_1 e^{i lambda}) with P^1_1 = sqrt(3)/2 cos(phi)
        for (int i = 0; i < plan.nlat(); ++i) {
            const double cphi = std::sqrt(1.0 - plan.latitudes().mu[i] * plan.latitudes().mu[i]);
            for (int j = 0; j < plan.nlon(); ++j) {
                const double lam = 2.0 * M_PI * j / plan.nlon();
                CHECK(g.at(i, j) ==
                      doctest::Approx(std::sqrt(3.0) * cphi * std::cos(lam)).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("round trip on random band-limited fields") {
    for (int R : {15, 31}) {
        TransformPlan plan(R);
        for (unsigned seed = 0; seed < 5; ++seed) {
            const SpectralField x = random_field(R, seed);
            const SpectralField back = plan.analyse(plan.synthesise(x));
            CHECK(rel_diff(back, x) < 1e-12);
        }
    }
}

TEST_CASE("transforms are linear") {
    const int R = 12;
    TransformPlan plan(R);
    const SpectralField x = random_field(R, 7), y = random_field(R, 8);
    GridField gx = plan.synthesise(x), gy = plan.synthesise(y);
    GridField mix = plan.make_grid();
    for (std::size_t i = 0; i < mix.values.size(); ++i)
        mix.values[i] = 2.5 * gx.values[i] - 0.75 * gy.values[i];
    SpectralField expect = x;
    expect *= 2.5;
    expect.axpy(-0.75, y);
    CHECK(rel_diff(plan.analyse(mix), expect) < 1e-12);
}

TEST_CASE("Parseval consistency between grid quadrature and coefficients") {
    const int R = 15;
    TransformPlan plan(R);
    const SpectralField x = random_field(R, 3), y = random_field(R, 4);
    const GridField gx = plan.synthesise(x), gy = plan.synthesise(y);
    double grid_ip = 0.0;
    for (int i = 0; i < plan.nlat(); ++i) {
        double row = 0.0;
        for (int j = 0; j < plan.nlon(); ++j) row += gx.at(i, j) * gy.at(i, j);
        grid_ip += plan.latitudes().weight[i] * row / plan.nlon();
    }
    double spec_ip = 0.0;
    for (int s = 0; s <= R; ++s) spec_ip += x.at(0, s).real() * y.at(0, s).real();
    for (int r = 1; r <= R; ++r)
        for (int s = r; s <= R; ++s)
            spec_ip += 2.0 * (x.at(r, s) * std::conj(y.at(r, s))).real();
    CHECK(grid_ip == doctest::Approx(spec_ip).epsilon(1e-10));
}

TEST_CASE("laplacian and its inverse") {
    const int R = 6;
    SUBCASE("eigenvalues") {
        SpectralField x(R);
        x.at(0, 0) = 1.0;
        CHECK(laplacian(x, 2.0).at(0, 0) == std::complex<double>(0.0, 0.0));
        SpectralField y(R);
        y.at(1, 2) = {1.0, -2.0};
        const SpectralField ly = laplacian(y, 1.0);
        CHECK(ly.at(1, 2).real() == doctest::Approx(-6.0));
        CHECK(ly.at(1, 2).imag() == doctest::Approx(12.0));
    }
    SUBCASE("inverse identity on s >= 1") {
        const SpectralField x = random_field(R, 11);
        SpectralField y = inv_laplacian(laplacian(x, 6.371e6), 6.371e6);
        for (int r = 0; r <= R; ++r)
            for (int s = std::max(r, 1); s <= R; ++s)
                CHECK(std::abs(y.at(r, s) - x.at(r, s)) < 1e-12 * x.max_abs());
        CHECK(y.at(0, 0) == std::complex<double>(0.0, 0.0));
    }
}

TEST_CASE("velocities from vorticity and divergence") {
    const int R = 15;
    const double a = 6.37122e6;
    TransformPlan plan(R);

    SUBCASE("zero vorticity and divergence give zero winds") {
        GridField u, v;
        plan.uv_from_vortdiv(SpectralField(R), SpectralField(R), a, u, v);
        CHECK(u.max_abs() == 0.0);
        CHECK(v.max_abs() == 0.0);
    }
    SUBCASE("solid-body rotation: vort ~ Y^0_1 gives u ~ cos(phi), v = 0") {
        SpectralField vort(R);
        vort.at(0, 1) = 1e-5;
        GridField u, v;
        plan.uv_from_vortdiv(vort, SpectralField(R), a, u, v);
        // psi = -a^2/2 * Y^0_1 coefficient; u = amp * cos(phi) with
        // amp = (a/2) sqrt(3/2) * 1e-5.
        const double amp = 0.5 * a * std::sqrt(1.5) * 1e-5;
        for (int i = 0; i < plan.nlat(); ++i) {
            const double cphi = std::sqrt(1.0 - plan.latitudes().mu[i] * plan.latitudes().mu[i]);
            for (int j = 0; j < plan.nlon(); ++j) {
                CHECK(u.at(i, j) == doctest::Approx(amp * cphi).epsilon(1e-11));
                CHECK(std::abs(v.at(i, j)) < 1e-11 * amp);
            }
        }
    }
    SUBCASE("round trip through the winds, top wavenumber excluded") {
        // Valid vorticity/divergence fields have zero spherical mean.
        SpectralField vort = random_field(R, 21);
        SpectralField div = random_field(R, 22);
        vort.at(0, 0) = 0.0;
        div.at(0, 0) = 0.0;
        GridField u, v;
        plan.uv_from_vortdiv(vort, div, a, u, v);
        auto [vort2, div2] = plan.vortdiv_from_uv(u, v, a);
        const SpectralField za = ml::restrict_space(vort, R - 1);
        const SpectralField zb = ml::restrict_space(vort2, R - 1);
        const SpectralField da = ml::restrict_space(div, R - 1);
        const SpectralField db = ml::restrict_space(div2, R - 1);
        CHECK(rel_diff(za, zb) < 1e-10);
        CHECK(rel_diff(da, db) < 1e-10);
    }
}

TEST_CASE("production kernels match the serial reference implementation") {
    const int R = 15;
    TransformPlan plan(R);
    const SpectralField x = random_field(R, 33);

    const GridField g = plan.synthesise(x);
    const auto ref_vals = reference::synthesise(x, plan.latitudes().mu, plan.nlon());
    double scale = g.max_abs();
    for (std::size_t i = 0; i < g.values.size(); ++i)
        CHECK(std::abs(g.values[i] - ref_vals[i]) < 1e-12 * scale);

    const SpectralField xa = plan.analyse(g);
    const SpectralField xr = reference::analyse(g.values, plan.latitudes().mu,
                                                plan.latitudes().weight, plan.nlon(), R);
    CHECK(rel_diff(xa, xr) < 1e-12);

    GridField u, v;
    SpectralField vort = random_field(R, 34), div = random_field(R, 35);
    plan.uv_from_vortdiv(vort, div, 6.371e6, u, v);
    std::vector<double> ur, vr;
    reference::uv(vort, div, 6.371e6, plan.latitudes().mu, plan.nlon(), ur, vr);
    scale = std::max(u.max_abs(), v.max_abs());
    for (std::size_t i = 0; i < ur.size(); ++i) {
        CHECK(std::abs(u.values[i] - ur[i]) < 1e-12 * scale);
        CHECK(std::abs(v.values[i] - vr[i]) < 1e-12 * scale);
    }
}

TEST_CASE("dealiased grid sizing") {
    CHECK(dealiased_nlon(15) == 48);
    CHECK(dealiased_nlon(31) == 96);
    CHECK(dealiased_nlon(63) == 192);
    for (int R : {15, 31, 42, 63, 85, 128}) {
        const int nlon = dealiased_nlon(R);
        CHECK(nlon >= 3 * R + 1);
        CHECK(nlon % 2 == 0);
    }
}
