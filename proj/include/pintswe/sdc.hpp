#pragma once

#include <optional>
#include <vector>

#include "pintswe/field.hpp"
#include "pintswe/quadrature.hpp"
#include "pintswe/swe.hpp"

namespace pintswe::sdc {

/// States and cached right-hand sides at all collocation nodes of one time
/// step. The caches hold F_I and F_E evaluated at the stored states.
struct SpaceTimeState {
    std::vector<PrognosticState> state;
    std::vector<PrognosticState> f_imp;
    std::vector<PrognosticState> f_exp;

    int num_nodes() const { return static_cast<int>(state.size()); }
};

/// Copies the initial condition to all nodes with a single right-hand-side
/// evaluation reused at every node.
SpaceTimeState spread(const PrognosticState& theta0, int num_nodes, const ImexOde& ode);

/// Re-evaluates both cached right-hand sides at one node.
void refresh_node(SpaceTimeState& sts, int node, const ImexOde& ode);

/// One pass of the implicit-explicit correction over the nodes m = 1..M.
/// The node-0 state is the initial condition and is left untouched; its
/// cached right-hand sides must be valid on entry. When fas is present, its
/// entry for each node is added to the update (the coarse-level correction).
void sweep(SpaceTimeState& sts, double dt, const QuadratureTables& tables, const ImexOde& ode,
           const std::vector<PrognosticState>* fas = nullptr);

/// Max-norm over nodes and coefficients of A(Theta) - 1 (x) Theta^n with
/// A(Theta) = Theta - dt (Q (x) I) F(Theta), using the cached right-hand
/// sides and the node-0 state as Theta^n.
double collocation_residual(const SpaceTimeState& sts, double dt, const QuadratureTables& tables);

/// Serial single-level step: spread, n_sweeps correction passes, return the
/// last-node value. residual_out, when given, receives the final collocation
/// residual of the step (diagnostics only).
PrognosticState sdc_step(const PrognosticState& theta0, double dt, const QuadratureTables& tables,
                         int n_sweeps, const ImexOde& ode, double* residual_out = nullptr);

}  // namespace pintswe::sdc
