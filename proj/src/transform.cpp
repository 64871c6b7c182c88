#include "pintswe/transform.hpp"

#include <fftw3.h>
#include <omp.h>

#include <cmath>
#include <mutex>
#include <stdexcept>

#include "pintswe/legendre.hpp"
#include "pintswe/parallel.hpp"

namespace pintswe {

namespace par {
namespace {
thread_local bool g_inner_enabled = true;
}
bool inner_enabled() { return g_inner_enabled; }
void set_inner_enabled(bool on) { g_inner_enabled = on; }
}  // namespace par

namespace {

std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

bool five_smooth(int n) {
    for (int p : {2, 3, 5})
        while (n % p == 0) n /= p;
    return n == 1;
}

}  // namespace

int dealiased_nlon(int truncation) {
    int n = 3 * truncation + 1;
    if (n % 2) ++n;
    while (!five_smooth(n)) n += 2;
    return n;
}

TransformPlan::TransformPlan(int truncation)
    : truncation_(truncation),
      nlat_(dealiased_nlon(truncation) / 2),
      nlon_(dealiased_nlon(truncation)) {
    if (truncation < 1) throw std::invalid_argument("TransformPlan: truncation must be >= 1");

    auto lats = std::make_shared<GaussLatitudes>(gauss_latitudes(nlat_));
    lats_ = lats;
    cos_phi_.resize(nlat_);
    for (int i = 0; i < nlat_; ++i) cos_phi_[i] = std::sqrt(1.0 - lats_->mu[i] * lats_->mu[i]);

    const int R = truncation_;
    p_tab_.resize(R + 1);
    h_tab_.resize(R + 1);
#pragma omp parallel for schedule(static, 1) if (par::inner_enabled() && R >= 15)
    for (int r = 0; r <= R; ++r) {
        const int np = R + 2 - r;  // s = r .. R+1
        const int nh = R + 1 - r;  // s = r .. R
        p_tab_[r].resize(static_cast<std::size_t>(nlat_) * np);
        h_tab_[r].resize(static_cast<std::size_t>(nlat_) * nh);
        for (int i = 0; i < nlat_; ++i) {
            double* p = p_tab_[r].data() + static_cast<std::size_t>(i) * np;
            double* h = h_tab_[r].data() + static_cast<std::size_t>(i) * nh;
            legendre_column(r, R + 1, lats_->mu[i], p);
            for (int s = r; s <= R; ++s) {
                const double upper = -s * legendre_eps(r, s + 1) * p[s + 1 - r];
                const double lower = (s > r) ? (s + 1.0) * legendre_eps(r, s) * p[s - 1 - r] : 0.0;
                h[s - r] = upper + lower;
            }
        }
    }

    // FFTW planning is not thread-safe; executing a shared plan on distinct
    // arrays is.
    std::lock_guard<std::mutex> lock(planner_mutex());
    std::vector<double> rbuf(nlon_);
    std::vector<std::complex<double>> cbuf(nlon_ / 2 + 1);
    fwd_ = reinterpret_cast<fftw_plan_s*>(fftw_plan_dft_r2c_1d(
        nlon_, rbuf.data(), reinterpret_cast<fftw_complex*>(cbuf.data()),
        FFTW_ESTIMATE | FFTW_UNALIGNED));
    bwd_ = reinterpret_cast<fftw_plan_s*>(fftw_plan_dft_c2r_1d(
        nlon_, reinterpret_cast<fftw_complex*>(cbuf.data()), rbuf.data(),
        FFTW_ESTIMATE | FFTW_UNALIGNED));
    if (!fwd_ || !bwd_) throw std::runtime_error("TransformPlan: FFTW planning failed");
}

TransformPlan::~TransformPlan() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    if (fwd_) fftw_destroy_plan(reinterpret_cast<fftw_plan>(fwd_));
    if (bwd_) fftw_destroy_plan(reinterpret_cast<fftw_plan>(bwd_));
}

std::vector<std::complex<double>> TransformPlan::fourier_rows(const GridField& g) const {
    const int R = truncation_;
    std::vector<std::complex<double>> rows(static_cast<std::size_t>(nlat_) * (R + 1));
    const double scale = 1.0 / nlon_;
#pragma omp parallel if (par::inner_enabled() && nlat_ >= 24)
    {
        std::vector<double> rbuf(nlon_);
        std::vector<std::complex<double>> cbuf(nlon_ / 2 + 1);
#pragma omp for schedule(static)
        for (int i = 0; i < nlat_; ++i) {
            std::copy(g.row(i), g.row(i) + nlon_, rbuf.data());
            fftw_execute_dft_r2c(reinterpret_cast<fftw_plan>(fwd_), rbuf.data(),
                                 reinterpret_cast<fftw_complex*>(cbuf.data()));
            std::complex<double>* out = rows.data() + static_cast<std::size_t>(i) * (R + 1);
            for (int r = 0; r <= R; ++r) out[r] = scale * cbuf[r];
        }
    }
    return rows;
}

void TransformPlan::inverse_rows(const std::complex<double>* rows, GridField& out) const {
    const int R = truncation_;
#pragma omp parallel if (par::inner_enabled() && nlat_ >= 24)
    {
        std::vector<double> rbuf(nlon_);
        std::vector<std::complex<double>> cbuf(nlon_ / 2 + 1);
#pragma omp for schedule(static)
        for (int i = 0; i < nlat_; ++i) {
            const std::complex<double>* in = rows + static_cast<std::size_t>(i) * (R + 1);
            cbuf[0] = std::complex<double>(in[0].real(), 0.0);
            for (int r = 1; r <= R; ++r) cbuf[r] = in[r];
            for (int r = R + 1; r <= nlon_ / 2; ++r) cbuf[r] = 0.0;
            fftw_execute_dft_c2r(reinterpret_cast<fftw_plan>(bwd_),
                                 reinterpret_cast<fftw_complex*>(cbuf.data()), rbuf.data());
            std::copy(rbuf.begin(), rbuf.end(), out.row(i));
        }
    }
}

SpectralField TransformPlan::analyse(const GridField& g) const {
    if (g.nlat != nlat_ || g.nlon != nlon_)
        throw std::invalid_argument("analyse: grid dimensions do not match the plan");
    const int R = truncation_;
    const auto rows = fourier_rows(g);
    SpectralField x(R);
#pragma omp parallel for schedule(static, 1) if (par::inner_enabled() && R >= 15)
    for (int r = 0; r <= R; ++r) {
        std::complex<double>* xc = x.data() + x.index(r, r);
        const int ns = R + 1 - r;
        for (int i = 0; i < nlat_; ++i) {
            const std::complex<double> gw = lats_->weight[i] * rows[static_cast<std::size_t>(i) * (R + 1) + r];
            const double* p = legendre_row(r, i);
            for (int k = 0; k < ns; ++k) xc[k] += gw * p[k];
        }
    }
    return x;
}

GridField TransformPlan::synthesise(const SpectralField& x) const {
    if (x.truncation() != truncation_)
        throw std::invalid_argument("synthesise: field truncation does not match the plan");
    const int R = truncation_;
    std::vector<std::complex<double>> rows(static_cast<std::size_t>(nlat_) * (R + 1));
#pragma omp parallel for schedule(static) if (par::inner_enabled() && nlat_ >= 24)
    for (int i = 0; i < nlat_; ++i) {
        std::complex<double>* out = rows.data() + static_cast<std::size_t>(i) * (R + 1);
        for (int r = 0; r <= R; ++r) {
            const std::complex<double>* xc = x.data() + x.index(r, r);
            const double* p = legendre_row(r, i);
            std::complex<double> acc(0.0, 0.0);
            for (int k = 0; k < R + 1 - r; ++k) acc += xc[k] * p[k];
            out[r] = acc;
        }
    }
    GridField g = make_grid();
    inverse_rows(rows.data(), g);
    return g;
}

void TransformPlan::uv_from_vortdiv(const SpectralField& vort, const SpectralField& div,
                                    double radius, GridField& u, GridField& v) const {
    if (vort.truncation() != truncation_ || div.truncation() != truncation_)
        throw std::invalid_argument("uv_from_vortdiv: truncation mismatch");
    const int R = truncation_;
    const SpectralField psi = inv_laplacian(vort, radius);
    const SpectralField chi = inv_laplacian(div, radius);

    std::vector<std::complex<double>> urows(static_cast<std::size_t>(nlat_) * (R + 1));
    std::vector<std::complex<double>> vrows(static_cast<std::size_t>(nlat_) * (R + 1));
    const double inv_a = 1.0 / radius;
#pragma omp parallel for schedule(static) if (par::inner_enabled() && nlat_ >= 24)
    for (int i = 0; i < nlat_; ++i) {
        std::complex<double>* ur = urows.data() + static_cast<std::size_t>(i) * (R + 1);
        std::complex<double>* vr = vrows.data() + static_cast<std::size_t>(i) * (R + 1);
        for (int r = 0; r <= R; ++r) {
            const std::complex<double>* ps = psi.data() + psi.index(r, r);
            const std::complex<double>* ch = chi.data() + chi.index(r, r);
            const double* p = legendre_row(r, i);
            const double* h = derivative_row(r, i);
            std::complex<double> psi_p(0.0, 0.0), chi_p(0.0, 0.0);
            std::complex<double> psi_h(0.0, 0.0), chi_h(0.0, 0.0);
            for (int k = 0; k < R + 1 - r; ++k) {
                psi_p += ps[k] * p[k];
                chi_p += ch[k] * p[k];
                psi_h += ps[k] * h[k];
                chi_h += ch[k] * h[k];
            }
            const std::complex<double> ir(0.0, static_cast<double>(r));
            ur[r] = inv_a * (ir * chi_p - psi_h);
            vr[r] = inv_a * (ir * psi_p + chi_h);
        }
    }
    u = make_grid();
    v = make_grid();
    inverse_rows(urows.data(), u);
    inverse_rows(vrows.data(), v);
#pragma omp parallel for schedule(static) if (par::inner_enabled() && nlat_ >= 24)
    for (int i = 0; i < nlat_; ++i) {
        const double c = 1.0 / cos_phi_[i];
        double* urow = u.row(i);
        double* vrow = v.row(i);
        for (int j = 0; j < nlon_; ++j) {
            urow[j] *= c;
            vrow[j] *= c;
        }
    }
}

std::pair<SpectralField, SpectralField> TransformPlan::vortdiv_from_uv(const GridField& u,
                                                                       const GridField& v,
                                                                       double radius) const {
    if (u.nlat != nlat_ || u.nlon != nlon_ || v.nlat != nlat_ || v.nlon != nlon_)
        throw std::invalid_argument("vortdiv_from_uv: grid dimensions do not match the plan");
    const int R = truncation_;
    GridField uc = make_grid(), vc = make_grid();
#pragma omp parallel for schedule(static) if (par::inner_enabled() && nlat_ >= 24)
    for (int i = 0; i < nlat_; ++i) {
        const double c = cos_phi_[i];
        const double* ui = u.row(i);
        const double* vi = v.row(i);
        double* uo = uc.row(i);
        double* vo = vc.row(i);
        for (int j = 0; j < nlon_; ++j) {
            uo[j] = ui[j] * c;
            vo[j] = vi[j] * c;
        }
    }
    const auto urows = fourier_rows(uc);
    const auto vrows = fourier_rows(vc);

    SpectralField vort(R), div(R);
    const double inv_a = 1.0 / radius;
#pragma omp parallel for schedule(static, 1) if (par::inner_enabled() && R >= 15)
    for (int r = 0; r <= R; ++r) {
        std::complex<double>* zc = vort.data() + vort.index(r, r);
        std::complex<double>* dc = div.data() + div.index(r, r);
        const int ns = R + 1 - r;
        for (int i = 0; i < nlat_; ++i) {
            const double wfac = inv_a * lats_->weight[i] / (cos_phi_[i] * cos_phi_[i]);
            const std::complex<double> ur = wfac * urows[static_cast<std::size_t>(i) * (R + 1) + r];
            const std::complex<double> vr = wfac * vrows[static_cast<std::size_t>(i) * (R + 1) + r];
            const std::complex<double> ir(0.0, static_cast<double>(r));
            const std::complex<double> irvr = ir * vr;
            const std::complex<double> irur = ir * ur;
            const double* p = legendre_row(r, i);
            const double* h = derivative_row(r, i);
            for (int k = 0; k < ns; ++k) {
                zc[k] += irvr * p[k] + ur * h[k];
                dc[k] += irur * p[k] - vr * h[k];
            }
        }
    }
    return {std::move(vort), std::move(div)};
}

SpectralField laplacian(const SpectralField& x, double radius) {
    const int R = x.truncation();
    SpectralField y(R);
    const double inv_a2 = 1.0 / (radius * radius);
    for (int r = 0; r <= R; ++r)
        for (int s = r; s <= R; ++s)
            y.at(r, s) = -s * (s + 1.0) * inv_a2 * x.at(r, s);
    return y;
}

SpectralField inv_laplacian(const SpectralField& x, double radius) {
    const int R = x.truncation();
    SpectralField y(R);
    const double a2 = radius * radius;
    for (int r = 0; r <= R; ++r)
        for (int s = r; s <= R; ++s)
            y.at(r, s) = (s == 0) ? 0.0 : x.at(r, s) * (-a2 / (s * (s + 1.0)));
    return y;
}

}  // namespace pintswe
