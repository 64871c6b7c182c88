#pragma once

#include <vector>

#include "pintswe/field.hpp"
#include "pintswe/grid.hpp"

namespace pintswe::reference {

/// Serial reference transforms: straightforward evaluation of the basis sums
/// with direct trigonometric sums in longitude instead of an FFT. Kept as the
/// independent check for the production kernels and as the baseline of the
/// transform benchmark.

/// Synthesis of a spectral field at the points (lambda_j, mu_i) with
/// lambda_j = 2 pi j / nlon; returns an nlat x nlon row-major array.
std::vector<double> synthesise(const SpectralField& x, const std::vector<double>& mu, int nlon);

/// Analysis by direct quadrature: weights/mu define the latitude rule,
/// values is nlat x nlon row-major.
SpectralField analyse(const std::vector<double>& values, const std::vector<double>& mu,
                      const std::vector<double>& weight, int nlon, int truncation);

/// Velocities (u, v) at the points (lambda_j, mu_i) from spectral vorticity
/// and divergence, evaluated directly from the stream-function and
/// velocity-potential sums.
void uv(const SpectralField& vort, const SpectralField& div, double radius,
        const std::vector<double>& mu, int nlon,
        std::vector<double>& u_out, std::vector<double>& v_out);

}  // namespace pintswe::reference
