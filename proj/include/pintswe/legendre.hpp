#pragma once

#include <vector>

namespace pintswe {

/// Recurrence coefficient eps^r_s = sqrt((s^2 - r^2) / (4 s^2 - 1)) of the
/// orthonormal associated Legendre functions; eps^r_s = 0 when s <= r.
double legendre_eps(int r, int s);

/// Fills out[0 .. smax-r] with the orthonormal associated Legendre values
/// P^r_s(mu) for s = r..smax, normalized so that the functions are
/// orthonormal on [-1, 1] with unit weight. The sectoral seed P^r_r is
/// evaluated in log space to avoid underflow at high zonal wavenumber near
/// the poles; the ascent in s uses the stable normalized three-term
/// recurrence.
void legendre_column(int r, int smax, double mu, double* out);

}  // namespace pintswe
