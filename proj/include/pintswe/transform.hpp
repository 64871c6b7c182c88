#pragma once

#include <complex>
#include <memory>
#include <utility>
#include <vector>

#include "pintswe/field.hpp"
#include "pintswe/grid.hpp"

struct fftw_plan_s;

namespace pintswe {

/// Grid sizes for a triangular truncation R with quadratic-term dealiasing:
/// nlon is the smallest even 5-smooth integer >= 3R+1 and nlat = nlon / 2.
int dealiased_nlon(int truncation);

/// Global spherical-harmonic transform between the Gaussian grid and
/// triangular-truncated spectral space, plus the vector transforms needed by
/// the shallow-water right-hand sides.
///
/// The plan precomputes the orthonormal associated Legendre values P^r_s(mu_i)
/// (up to total wavenumber R+1, needed by the meridional-derivative
/// recurrences) and the FFT machinery for the longitude direction. A plan is
/// immutable after construction and safe to share across threads.
class TransformPlan {
public:
    explicit TransformPlan(int truncation);
    ~TransformPlan();

    TransformPlan(const TransformPlan&) = delete;
    TransformPlan& operator=(const TransformPlan&) = delete;

    int truncation() const { return truncation_; }
    int nlat() const { return nlat_; }
    int nlon() const { return nlon_; }
    const GaussLatitudes& latitudes() const { return *lats_; }
    std::shared_ptr<const GaussLatitudes> latitudes_ptr() const { return lats_; }

    GridField make_grid() const { return GridField(nlat_, nlon_, lats_); }

    /// Legendre values P^r_s(mu_i) for s = r..R+1, contiguous in s for each
    /// latitude row i. Exposed for the orthonormality checks.
    const double* legendre_row(int r, int lat) const {
        return p_tab_[r].data() + static_cast<std::size_t>(lat) * (truncation_ + 2 - r);
    }
    /// Meridional-derivative values H^r_s(mu_i) = (1-mu^2) dP^r_s/dmu for
    /// s = r..R, same layout as legendre_row.
    const double* derivative_row(int r, int lat) const {
        return h_tab_[r].data() + static_cast<std::size_t>(lat) * (truncation_ + 1 - r);
    }

    /// Grid -> spectral (forward Fourier transform in longitude followed by
    /// Gauss-Legendre quadrature in latitude).
    SpectralField analyse(const GridField& g) const;

    /// Spectral -> grid (Legendre sums in latitude followed by an inverse
    /// Fourier transform in longitude).
    GridField synthesise(const SpectralField& x) const;

    /// Velocities on the grid from spectral vorticity and divergence via the
    /// stream function and velocity potential. The internal products
    /// (U, V) = (u cos phi, v cos phi) are divided by cos phi on the grid,
    /// which is safe because the Gaussian latitudes exclude the poles.
    void uv_from_vortdiv(const SpectralField& vort, const SpectralField& div, double radius,
                         GridField& u, GridField& v) const;

    /// Spectral vorticity and divergence of the grid vector field (u, v).
    std::pair<SpectralField, SpectralField> vortdiv_from_uv(const GridField& u,
                                                            const GridField& v,
                                                            double radius) const;

private:
    int truncation_;
    int nlat_;
    int nlon_;
    std::shared_ptr<const GaussLatitudes> lats_;
    std::vector<double> cos_phi_;                // sqrt(1 - mu_i^2)
    std::vector<std::vector<double>> p_tab_;     // [r] -> nlat x (R+2-r)
    std::vector<std::vector<double>> h_tab_;     // [r] -> nlat x (R+1-r)
    fftw_plan_s* fwd_ = nullptr;                 // real nlon -> complex nlon/2+1
    fftw_plan_s* bwd_ = nullptr;                 // complex nlon/2+1 -> real nlon

    // Forward FFT of every grid row, scaled by 1/nlon; keeps r <= R.
    std::vector<std::complex<double>> fourier_rows(const GridField& g) const;
    // Inverse FFT of per-row Fourier coefficients (r <= R) into a grid.
    void inverse_rows(const std::complex<double>* rows, GridField& out) const;
};

/// Multiplies each (r, s) coefficient by the Laplace-Beltrami eigenvalue
/// -s(s+1)/a^2.
SpectralField laplacian(const SpectralField& x, double radius);

/// Divides each coefficient by -s(s+1)/a^2; the (0,0) mode is set to zero.
SpectralField inv_laplacian(const SpectralField& x, double radius);

}  // namespace pintswe
