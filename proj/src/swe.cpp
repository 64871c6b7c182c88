#include "pintswe/swe.hpp"

#include <cmath>

#include "pintswe/parallel.hpp"

namespace pintswe {

PrognosticState eval_linear(const PrognosticState& state, const ModelParams& p) {
    const int R = state.truncation();
    PrognosticState out(R);
    const double inv_a2 = 1.0 / (p.radius * p.radius);
    for (int r = 0; r <= R; ++r) {
        for (int s = r; s <= R; ++s) {
            const double lam = -s * (s + 1.0) * inv_a2;  // Laplacian eigenvalue
            const auto phi = state.phi.at(r, s);
            const auto vor = state.vort.at(r, s);
            const auto div = state.div.at(r, s);
            out.phi.at(r, s) = -p.phi_bar * div + p.nu * lam * phi;
            out.vort.at(r, s) = p.nu * lam * vor;
            out.div.at(r, s) = -lam * phi + p.nu * lam * div;
        }
    }
    return out;
}

PrognosticState eval_nonlinear(const PrognosticState& state, const ModelParams& p,
                               const TransformPlan& plan) {
    const int R = state.truncation();
    const int nlat = plan.nlat(), nlon = plan.nlon();

    GridField u, v;
    plan.uv_from_vortdiv(state.vort, state.div, p.radius, u, v);
    const GridField phi = plan.synthesise(state.phi);
    const GridField vort = plan.synthesise(state.vort);

    GridField fu = plan.make_grid(), fv = plan.make_grid();   // Phi' V
    GridField qu = plan.make_grid(), qv = plan.make_grid();   // (zeta + f) V
    GridField ke = plan.make_grid();                          // V.V / 2
    const auto& mu = plan.latitudes().mu;
#pragma omp parallel for schedule(static) if (par::inner_enabled() && nlat >= 24)
    for (int i = 0; i < nlat; ++i) {
        const double f = 2.0 * p.omega * mu[i];
        for (int j = 0; j < nlon; ++j) {
            const double uu = u.at(i, j), vv = v.at(i, j);
            const double phip = phi.at(i, j) - p.phi_bar;
            const double absv = vort.at(i, j) + f;
            fu.at(i, j) = phip * uu;
            fv.at(i, j) = phip * vv;
            qu.at(i, j) = absv * uu;
            qv.at(i, j) = absv * vv;
            ke.at(i, j) = 0.5 * (uu * uu + vv * vv);
        }
    }

    auto [flux_curl, flux_div] = plan.vortdiv_from_uv(fu, fv, p.radius);
    (void)flux_curl;
    auto [q_curl, q_div] = plan.vortdiv_from_uv(qu, qv, p.radius);
    const SpectralField ke_lap = laplacian(plan.analyse(ke), p.radius);

    PrognosticState out(R);
    out.phi = flux_div;
    out.phi *= -1.0;
    out.vort = q_div;
    out.vort *= -1.0;
    out.div = q_curl;
    out.div -= ke_lap;
    return out;
}

std::pair<PrognosticState, PrognosticState> imex_split(const PrognosticState& state,
                                                       const ModelParams& p,
                                                       const TransformPlan& plan) {
    return {eval_linear(state, p), eval_nonlinear(state, p, plan)};
}

PrognosticState solve_implicit(const PrognosticState& b, double c, const ModelParams& p) {
    const int R = b.truncation();
    PrognosticState out(R);
    const double inv_a2 = 1.0 / (p.radius * p.radius);
    for (int r = 0; r <= R; ++r) {
        for (int s = r; s <= R; ++s) {
            const double lam = -s * (s + 1.0) * inv_a2;
            // Diffusion substep: factor (1 - c nu lam) out of the mode matrix.
            const double diff = 1.0 - c * p.nu * lam;  // >= 1 since lam <= 0
            const std::complex<double> bp = b.phi.at(r, s) / diff;
            const std::complex<double> bz = b.vort.at(r, s) / diff;
            const std::complex<double> bd = b.div.at(r, s) / diff;
            // Gravity-wave substep with the diffusion-adjusted coefficient.
            const double ce = c / diff;
            const double det = 1.0 - ce * ce * p.phi_bar * lam;  // >= 1
            out.phi.at(r, s) = (bp - ce * p.phi_bar * bd) / det;
            out.div.at(r, s) = (bd - ce * lam * bp) / det;
            out.vort.at(r, s) = bz;
        }
    }
    return out;
}

}  // namespace pintswe
