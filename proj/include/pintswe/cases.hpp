#pragma once

#include "pintswe/field.hpp"
#include "pintswe/swe.hpp"
#include "pintswe/transform.hpp"

namespace pintswe::cases {

/// Gaussian geopotential dome at rest. The bump width is not fixed by the
/// usual references; it is a plain configuration parameter.
struct GaussianDomeParams {
    double h_mean = 29400.0;   // m
    double amplitude = 6000.0; // m
    double width = 10.0;       // dimensionless exponent coefficient
    double lon_center = M_PI;
    double lat_center = M_PI / 4.0;
};

/// Zonal-wavenumber-4 Rossby-Haurwitz wave, Williamson standard parameters.
struct RossbyHaurwitzParams {
    double omega_wave = 7.848e-6;  // 1/s, both angular parameters
    int wavenumber = 4;
    double h0 = 8000.0;  // m, reference height
};

/// Balanced zonal jet with a geopotential perturbation (barotropic
/// instability benchmark), published parameter values.
struct GalewskyParams {
    double u_max = 80.0;             // m/s
    double lat0 = M_PI / 7.0;        // jet band south edge
    double lat1 = M_PI / 2.0 - M_PI / 7.0;  // jet band north edge
    double h_mean = 10158.0;         // m, target global mean depth
    double h_pert = 120.0;           // m, bump amplitude (0 = unperturbed jet)
    double lat2 = M_PI / 4.0;        // bump center latitude
    double bump_alpha = 1.0 / 3.0;   // bump zonal width
    double bump_beta = 1.0 / 15.0;   // bump meridional width
};

PrognosticState init_gaussian_dome(const TransformPlan& plan, const ModelParams& p,
                                   const GaussianDomeParams& gp);

/// Non-divergent initial wave; the geopotential balances the divergence
/// tendency, which is verified by the case tests via the right-hand sides.
PrognosticState init_rossby_haurwitz(const TransformPlan& plan, const ModelParams& p,
                                     const RossbyHaurwitzParams& rp);

PrognosticState init_galewsky(const TransformPlan& plan, const ModelParams& p,
                              const GalewskyParams& gp);

}  // namespace pintswe::cases
