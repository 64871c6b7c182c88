#pragma once

#include <vector>

#include "pintswe/field.hpp"

namespace pintswe::analysis {

/// Normalized spectral max-norm error per prognostic variable, restricted to
/// modes with r, s <= r_norm.
struct ErrorReport {
    int r_norm = 0;
    double e_phi = 0.0;
    double e_vort = 0.0;
    double e_div = 0.0;
};

/// E = max_{r <= r_norm, s in [r, r_norm]} |x - ref| / (same max-norm of ref).
/// Throws std::domain_error when the reference norm vanishes for a variable.
ErrorReport spectral_error(const PrognosticState& x, const PrognosticState& ref, int r_norm);

/// Semi-norm of a single field used by spectral_error.
double seminorm(const SpectralField& x, int r_norm);

/// For each total wavenumber n0, the maximum of |x^r_{n0}| over r <= n0.
std::vector<double> max_spectrum(const SpectralField& x);

/// Parameters of the theoretical cost model. M counts are the node counts
/// minus one (M_f, M_c); unit costs default to the normalization
/// C^s_f = C^fi_f = C^fe_f = 1 and coarse costs scale with alpha^2.
struct CostParams {
    int n_ts = 1;
    int m_fine = 2;
    int m_coarse = 1;
    int n_pf = 1;
    int n_s = 1;
    int n_ml = 1;
    double alpha = 1.0;
    double c_sweep = 1.0;  // C^s_f
    double c_fi = 1.0;     // C^fi_f
    double c_fe = 1.0;     // C^fe_f
};

/// Cost decompositions of the prediction and one PFASST iteration, and the
/// block totals for PFASST, serial SDC, and serial MLSDC. Communication cost
/// has no closed form and is reported as measured wall time only, so it is
/// excluded here.
double cost_prediction(const CostParams& p);
double cost_iteration(const CostParams& p);
double cost_pfasst(const CostParams& p);
double cost_sdc(const CostParams& p);
double cost_mlsdc(const CostParams& p);

/// Closed-form theoretical speedups under the unit-cost normalization.
/// dt_ratio = dt_pfasst / dt_serial rescales the speedup when the schemes
/// need different time step sizes for the same accuracy.
double speedup_vs_sdc(const CostParams& p, double dt_ratio = 1.0);
double speedup_vs_mlsdc(const CostParams& p, double dt_ratio = 1.0);

}  // namespace pintswe::analysis
