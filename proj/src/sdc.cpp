#include "pintswe/sdc.hpp"

#include <cassert>

namespace pintswe::sdc {

SpaceTimeState spread(const PrognosticState& theta0, int num_nodes, const ImexOde& ode) {
    SpaceTimeState sts;
    sts.state.assign(num_nodes, theta0);
    sts.f_imp.assign(num_nodes, ode.eval_implicit(theta0));
    sts.f_exp.assign(num_nodes, ode.eval_explicit(theta0));
    return sts;
}

void refresh_node(SpaceTimeState& sts, int node, const ImexOde& ode) {
    sts.f_imp[node] = ode.eval_implicit(sts.state[node]);
    sts.f_exp[node] = ode.eval_explicit(sts.state[node]);
}

void sweep(SpaceTimeState& sts, double dt, const QuadratureTables& tables, const ImexOde& ode,
           const std::vector<PrognosticState>* fas) {
    const int M = sts.num_nodes() - 1;
    assert(tables.num_nodes == M + 1);
    const PrognosticState& theta_n = sts.state[0];

    // Right-hand sides of the previous iterate, needed for the correction
    // differences after the caches are refreshed node by node.
    const std::vector<PrognosticState> f_imp_old = sts.f_imp;
    const std::vector<PrognosticState> f_exp_old = sts.f_exp;

    for (int m = 0; m < M; ++m) {
        PrognosticState rhs = theta_n;
        for (int j = 1; j <= m; ++j) {
            rhs.axpy(dt * tables.q_exp(m + 1, j), sts.f_exp[j]);
            rhs.axpy(-dt * tables.q_exp(m + 1, j), f_exp_old[j]);
            rhs.axpy(dt * tables.q_imp(m + 1, j), sts.f_imp[j]);
            rhs.axpy(-dt * tables.q_imp(m + 1, j), f_imp_old[j]);
        }
        rhs.axpy(-dt * tables.q_imp(m + 1, m + 1), f_imp_old[m + 1]);
        for (int j = 0; j <= M; ++j) {
            rhs.axpy(dt * tables.q(m + 1, j), f_imp_old[j]);
            rhs.axpy(dt * tables.q(m + 1, j), f_exp_old[j]);
        }
        if (fas) rhs += (*fas)[m + 1];

        sts.state[m + 1] = ode.solve_implicit(rhs, dt * tables.q_imp(m + 1, m + 1));
        refresh_node(sts, m + 1, ode);
    }
}

double collocation_residual(const SpaceTimeState& sts, double dt, const QuadratureTables& tables) {
    const int M = sts.num_nodes() - 1;
    double res = 0.0;
    for (int m = 0; m <= M; ++m) {
        PrognosticState acc = sts.state[m];
        acc -= sts.state[0];
        for (int j = 0; j <= M; ++j) {
            acc.axpy(-dt * tables.q(m, j), sts.f_imp[j]);
            acc.axpy(-dt * tables.q(m, j), sts.f_exp[j]);
        }
        res = std::max(res, acc.max_abs());
    }
    return res;
}

PrognosticState sdc_step(const PrognosticState& theta0, double dt, const QuadratureTables& tables,
                         int n_sweeps, const ImexOde& ode, double* residual_out) {
    SpaceTimeState sts = spread(theta0, tables.num_nodes, ode);
    for (int k = 0; k < n_sweeps; ++k) sweep(sts, dt, tables, ode);
    if (residual_out) *residual_out = collocation_residual(sts, dt, tables);
    return sts.state[tables.num_nodes - 1];
}

}  // namespace pintswe::sdc
