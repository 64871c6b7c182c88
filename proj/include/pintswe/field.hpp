#pragma once

#include <cassert>
#include <complex>
#include <cstddef>
#include <vector>

namespace pintswe {

/// Triangular-truncated spherical-harmonic coefficient array for one scalar
/// variable. Coefficients are stored r-major: for r = 0..R the block holds
/// s = r..R. Only nonnegative zonal wavenumbers are stored; the negative-r
/// modes are implied by conjugate symmetry of a real field.
class SpectralField {
public:
    SpectralField() = default;

    explicit SpectralField(int truncation)
        : truncation_(truncation), coeffs_(size(truncation)) {}

    static std::size_t size(int truncation) {
        return static_cast<std::size_t>(truncation + 1) * (truncation + 2) / 2;
    }

    int truncation() const { return truncation_; }
    std::size_t num_coeffs() const { return coeffs_.size(); }

    /// Offset of (r, s) in the r-major layout, valid for 0 <= r <= s <= R.
    std::size_t index(int r, int s) const {
        assert(r >= 0 && r <= s && s <= truncation_);
        return static_cast<std::size_t>(r) * (2 * truncation_ + 3 - r) / 2 + (s - r);
    }

    std::complex<double>& at(int r, int s) { return coeffs_[index(r, s)]; }
    const std::complex<double>& at(int r, int s) const { return coeffs_[index(r, s)]; }

    std::complex<double>* data() { return coeffs_.data(); }
    const std::complex<double>* data() const { return coeffs_.data(); }

    SpectralField& operator+=(const SpectralField& o) {
        assert(truncation_ == o.truncation_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    SpectralField& operator-=(const SpectralField& o) {
        assert(truncation_ == o.truncation_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    SpectralField& operator*=(double a) {
        for (auto& c : coeffs_) c *= a;
        return *this;
    }
    /// this += a * x
    void axpy(double a, const SpectralField& x) {
        assert(truncation_ == x.truncation_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += a * x.coeffs_[i];
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
        return m;
    }

    friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
    friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
    friend SpectralField operator*(double s, SpectralField a) { return a *= s; }

private:
    int truncation_ = -1;
    std::vector<std::complex<double>> coeffs_;
};

/// The prognostic triple (geopotential, vorticity, divergence) in spectral
/// space. All three fields share one truncation.
struct PrognosticState {
    SpectralField phi;   // geopotential, m^2/s^2
    SpectralField vort;  // relative vorticity, 1/s
    SpectralField div;   // divergence, 1/s

    PrognosticState() = default;
    explicit PrognosticState(int truncation)
        : phi(truncation), vort(truncation), div(truncation) {}

    int truncation() const { return phi.truncation(); }

    PrognosticState& operator+=(const PrognosticState& o) {
        phi += o.phi; vort += o.vort; div += o.div;
        return *this;
    }
    PrognosticState& operator-=(const PrognosticState& o) {
        phi -= o.phi; vort -= o.vort; div -= o.div;
        return *this;
    }
    PrognosticState& operator*=(double a) {
        phi *= a; vort *= a; div *= a;
        return *this;
    }
    void axpy(double a, const PrognosticState& x) {
        phi.axpy(a, x.phi); vort.axpy(a, x.vort); div.axpy(a, x.div);
    }

    double max_abs() const {
        return std::max({phi.max_abs(), vort.max_abs(), div.max_abs()});
    }

    friend PrognosticState operator+(PrognosticState a, const PrognosticState& b) { return a += b; }
    friend PrognosticState operator-(PrognosticState a, const PrognosticState& b) { return a -= b; }
    friend PrognosticState operator*(double s, PrognosticState a) { return a *= s; }
};

}  // namespace pintswe
