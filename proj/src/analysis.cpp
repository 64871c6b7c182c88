#include "pintswe/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace pintswe::analysis {

double seminorm(const SpectralField& x, int r_norm) {
    const int cap = std::min(r_norm, x.truncation());
    double m = 0.0;
    for (int r = 0; r <= cap; ++r)
        for (int s = r; s <= cap; ++s) m = std::max(m, std::abs(x.at(r, s)));
    return m;
}

namespace {

double one_error(const SpectralField& x, const SpectralField& ref, int r_norm) {
    const double denom = seminorm(ref, r_norm);
    if (denom == 0.0)
        throw std::domain_error("spectral_error: reference norm vanishes on the retained modes");
    const int cap = std::min({r_norm, x.truncation(), ref.truncation()});
    double num = 0.0;
    for (int r = 0; r <= cap; ++r)
        for (int s = r; s <= cap; ++s) num = std::max(num, std::abs(x.at(r, s) - ref.at(r, s)));
    return num / denom;
}

}  // namespace

ErrorReport spectral_error(const PrognosticState& x, const PrognosticState& ref, int r_norm) {
    ErrorReport rep;
    rep.r_norm = r_norm;
    rep.e_phi = one_error(x.phi, ref.phi, r_norm);
    rep.e_vort = one_error(x.vort, ref.vort, r_norm);
    rep.e_div = one_error(x.div, ref.div, r_norm);
    return rep;
}

std::vector<double> max_spectrum(const SpectralField& x) {
    const int R = x.truncation();
    std::vector<double> spec(R + 1, 0.0);
    for (int r = 0; r <= R; ++r)
        for (int s = r; s <= R; ++s) spec[s] = std::max(spec[s], std::abs(x.at(r, s)));
    return spec;
}

double cost_prediction(const CostParams& p) {
    const double a2 = p.alpha * p.alpha;
    const double fi_c = a2 * p.c_fi, fe_c = a2 * p.c_fe, s_c = a2 * p.c_sweep;
    return (p.m_coarse + 1) * (fi_c + fe_c) + p.n_ts * (fi_c + fe_c) +
           p.n_ts * p.m_coarse * (s_c + fi_c + fe_c);
}

double cost_iteration(const CostParams& p) {
    const double a2 = p.alpha * p.alpha;
    const double fi_c = a2 * p.c_fi, fe_c = a2 * p.c_fe, s_c = a2 * p.c_sweep;
    return p.m_fine * (p.c_sweep + p.c_fi + p.c_fe) + p.m_coarse * (fi_c + fe_c) +
           (fi_c + fe_c) + p.m_coarse * (s_c + fi_c + fe_c) + (p.c_fi + p.c_fe);
}

double cost_pfasst(const CostParams& p) {
    return cost_prediction(p) + p.n_pf * cost_iteration(p);
}

double cost_sdc(const CostParams& p) {
    return p.n_ts * p.m_fine * (p.c_fi + p.c_fe) +
           p.n_ts * p.n_s * p.m_fine * (p.c_sweep + p.c_fi + p.c_fe);
}

double cost_mlsdc(const CostParams& p) {
    const double a2 = p.alpha * p.alpha;
    const double fi_c = a2 * p.c_fi, fe_c = a2 * p.c_fe, s_c = a2 * p.c_sweep;
    return p.n_ts * (p.m_fine * (p.c_fi + p.c_fe) +
                     p.n_ml * (p.m_fine * (p.c_sweep + p.c_fi + p.c_fe) +
                               p.m_coarse * (fi_c + fe_c) + p.m_coarse * (s_c + fi_c + fe_c)));
}

double speedup_vs_sdc(const CostParams& p, double dt_ratio) {
    const double a = 2.0 / 3.0;
    const double b = (3.0 * p.m_fine + 2.0) / (3.0 * p.n_ts * p.m_fine);
    const double c = (5.0 * p.m_coarse + 2.0) / (3.0 * p.n_ts * p.m_fine);
    const double d = (2.0 * p.m_coarse + (3.0 * p.m_coarse + 2.0) * p.n_ts + 2.0) /
                     (3.0 * p.n_ts * p.m_fine);
    const double a2 = p.alpha * p.alpha;
    return dt_ratio * (p.n_s + a) / (b * p.n_pf + c * a2 * p.n_pf + d * a2);
}

double speedup_vs_mlsdc(const CostParams& p, double dt_ratio) {
    const double a = 2.0 / 3.0;
    const double b = (3.0 * p.m_fine + 2.0) / (3.0 * p.n_ts * p.m_fine);
    const double c = (5.0 * p.m_coarse + 2.0) / (3.0 * p.n_ts * p.m_fine);
    const double d = (2.0 * p.m_coarse + (3.0 * p.m_coarse + 2.0) * p.n_ts + 2.0) /
                     (3.0 * p.n_ts * p.m_fine);
    const double e = (3.0 * p.m_fine + 2.0) / (5.0 * p.n_ts * p.m_coarse);
    const double f = (5.0 * p.m_coarse + 2.0) / (5.0 * p.n_ts * p.m_coarse);
    const double g = (2.0 * p.m_coarse + (3.0 * p.m_coarse + 2.0) * p.n_ts + 2.0) /
                     (5.0 * p.n_ts * p.m_coarse);
    const double a2 = p.alpha * p.alpha;
    return dt_ratio * ((p.n_ml + a) / (b * p.n_pf + c * a2 * p.n_pf + d * a2) +
                       p.n_ml / (e * p.n_pf / a2 + f * p.n_pf + g));
}

}  // namespace pintswe::analysis
