#include "pintswe/reference.hpp"

#include <cmath>
#include <complex>

#include "pintswe/legendre.hpp"
#include "pintswe/transform.hpp"

namespace pintswe::reference {

namespace {

// Sums the Fourier series sum_{r=-R..R} G_r e^{i r lambda_j} for real fields
// (G_{-r} = conj(G_r)) by direct evaluation.
void fourier_row_to_values(const std::vector<std::complex<double>>& g, int nlon, double* out) {
    const int R = static_cast<int>(g.size()) - 1;
    for (int j = 0; j < nlon; ++j) {
        const double lam = 2.0 * M_PI * j / nlon;
        double acc = g[0].real();
        for (int r = 1; r <= R; ++r)
            acc += 2.0 * (g[r].real() * std::cos(r * lam) - g[r].imag() * std::sin(r * lam));
        out[j] = acc;
    }
}

}  // namespace

std::vector<double> synthesise(const SpectralField& x, const std::vector<double>& mu, int nlon) {
    const int R = x.truncation();
    const int nlat = static_cast<int>(mu.size());
    std::vector<double> out(static_cast<std::size_t>(nlat) * nlon);
    std::vector<double> p(R + 2);
    std::vector<std::complex<double>> g(R + 1);
    for (int i = 0; i < nlat; ++i) {
        for (int r = 0; r <= R; ++r) {
            legendre_column(r, R, mu[i], p.data());
            std::complex<double> acc(0.0, 0.0);
            for (int s = r; s <= R; ++s) acc += x.at(r, s) * p[s - r];
            g[r] = acc;
        }
        fourier_row_to_values(g, nlon, out.data() + static_cast<std::size_t>(i) * nlon);
    }
    return out;
}

SpectralField analyse(const std::vector<double>& values, const std::vector<double>& mu,
                      const std::vector<double>& weight, int nlon, int truncation) {
    const int R = truncation;
    const int nlat = static_cast<int>(mu.size());
    SpectralField x(R);
    std::vector<double> p(R + 2);
    for (int i = 0; i < nlat; ++i) {
        const double* row = values.data() + static_cast<std::size_t>(i) * nlon;
        for (int r = 0; r <= R; ++r) {
            std::complex<double> g(0.0, 0.0);
            for (int j = 0; j < nlon; ++j) {
                const double lam = 2.0 * M_PI * j / nlon;
                g += row[j] * std::complex<double>(std::cos(r * lam), -std::sin(r * lam));
            }
            g /= static_cast<double>(nlon);
            legendre_column(r, R, mu[i], p.data());
            for (int s = r; s <= R; ++s) x.at(r, s) += weight[i] * g * p[s - r];
        }
    }
    return x;
}

void uv(const SpectralField& vort, const SpectralField& div, double radius,
        const std::vector<double>& mu, int nlon,
        std::vector<double>& u_out, std::vector<double>& v_out) {
    const int R = vort.truncation();
    const int nlat = static_cast<int>(mu.size());
    const SpectralField psi = inv_laplacian(vort, radius);
    const SpectralField chi = inv_laplacian(div, radius);
    u_out.assign(static_cast<std::size_t>(nlat) * nlon, 0.0);
    v_out.assign(static_cast<std::size_t>(nlat) * nlon, 0.0);
    std::vector<double> p(R + 2), h(R + 1);
    std::vector<std::complex<double>> gu(R + 1), gv(R + 1);
    for (int i = 0; i < nlat; ++i) {
        const double cphi = std::sqrt(1.0 - mu[i] * mu[i]);
        for (int r = 0; r <= R; ++r) {
            legendre_column(r, R + 1, mu[i], p.data());
            for (int s = r; s <= R; ++s) {
                const double upper = -s * legendre_eps(r, s + 1) * p[s + 1 - r];
                const double lower = (s > r) ? (s + 1.0) * legendre_eps(r, s) * p[s - 1 - r] : 0.0;
                h[s - r] = upper + lower;
            }
            std::complex<double> psi_p(0), chi_p(0), psi_h(0), chi_h(0);
            for (int s = r; s <= R; ++s) {
                psi_p += psi.at(r, s) * p[s - r];
                chi_p += chi.at(r, s) * p[s - r];
                psi_h += psi.at(r, s) * h[s - r];
                chi_h += chi.at(r, s) * h[s - r];
            }
            const std::complex<double> ir(0.0, static_cast<double>(r));
            gu[r] = (ir * chi_p - psi_h) / radius;
            gv[r] = (ir * psi_p + chi_h) / radius;
        }
        double* urow = u_out.data() + static_cast<std::size_t>(i) * nlon;
        double* vrow = v_out.data() + static_cast<std::size_t>(i) * nlon;
        fourier_row_to_values(gu, nlon, urow);
        fourier_row_to_values(gv, nlon, vrow);
        for (int j = 0; j < nlon; ++j) {
            urow[j] /= cphi;
            vrow[j] /= cphi;
        }
    }
}

}  // namespace pintswe::reference
