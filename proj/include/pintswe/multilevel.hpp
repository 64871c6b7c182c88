#pragma once

#include <memory>
#include <vector>

#include "pintswe/quadrature.hpp"
#include "pintswe/sdc.hpp"
#include "pintswe/swe.hpp"
#include "pintswe/transform.hpp"

namespace pintswe::ml {

/// One space-time level: spectral truncation, collocation tables, and the
/// right-hand side bound to that resolution. The transform plan may be null
/// for surrogate problems that never evaluate pseudo-spectral terms.
struct LevelSpec {
    int truncation = 0;
    std::shared_ptr<const TransformPlan> plan;
    QuadratureTables tables;
    std::shared_ptr<const ImexOde> ode;

    int num_nodes() const { return tables.num_nodes; }
};

/// A fine/coarse level pair with the Lagrange time-transfer matrices. For the
/// supported nested node pairs, time restriction is pointwise injection and
/// time interpolation is injection at shared nodes plus polynomial evaluation
/// at the rest.
struct TransferPair {
    LevelSpec fine;
    LevelSpec coarse;
    Matrix time_restrict;   // Pi^c_f: (Mc+1) x (Mf+1)
    Matrix time_interp;     // Pi^f_c: (Mf+1) x (Mc+1)
    Matrix qf_time_restricted;  // Pi^c_f * Q_f, used by the FAS correction
};

/// Validates the level pair and builds the transfer matrices. Supported node
/// pairs: equal node counts plus the nested pairs 3->2 and 5->3.
TransferPair make_transfer_pair(LevelSpec fine, LevelSpec coarse);

/// Keeps coefficients with r <= R_c and s <= R_c; drops the rest.
SpectralField restrict_space(const SpectralField& x, int coarse_truncation);
/// Zero-pads to the fine truncation; exact transpose of restrict_space.
SpectralField interpolate_space(const SpectralField& x, int fine_truncation);

PrognosticState restrict_space(const PrognosticState& x, int coarse_truncation);
PrognosticState interpolate_space(const PrognosticState& x, int fine_truncation);

/// Applies the Lagrange matrix across nodes to states and cached right-hand
/// sides; the result stays at the input's spatial truncation.
sdc::SpaceTimeState restrict_time(const sdc::SpaceTimeState& sts, const TransferPair& pair);
sdc::SpaceTimeState interpolate_time(const sdc::SpaceTimeState& sts, const TransferPair& pair);

/// Time-then-space restriction of the states only; the caller re-evaluates
/// the coarse right-hand sides at the restricted states.
std::vector<PrognosticState> restrict_states(const std::vector<PrognosticState>& fine_states,
                                             const TransferPair& pair);

/// FAS correction tau_c = A_c(R Theta_f) - R A_f(Theta_f) for the two-level
/// case. coarse_sts must hold the restricted states with re-evaluated
/// right-hand sides; fine_sts supplies the fine right-hand sides.
std::vector<PrognosticState> fas_correction(const sdc::SpaceTimeState& fine_sts,
                                            const sdc::SpaceTimeState& coarse_sts, double dt,
                                            const TransferPair& pair);

/// Space-then-time interpolation of the coarse increment (new minus saved),
/// one fine-level state per fine node.
std::vector<PrognosticState> interpolate_increment(const std::vector<PrognosticState>& coarse_new,
                                                   const std::vector<PrognosticState>& coarse_saved,
                                                   const TransferPair& pair);

/// Space-then-time interpolation of full coarse states to the fine nodes.
std::vector<PrognosticState> interpolate_states(const std::vector<PrognosticState>& coarse_states,
                                                const TransferPair& pair);

/// Serial two-level MLSDC step: per iteration one fine sweep, restriction
/// with re-evaluated coarse right-hand sides and FAS correction, one coarse
/// sweep, and increment interpolation of states and right-hand sides.
PrognosticState mlsdc_step(const PrognosticState& theta0, double dt, const TransferPair& pair,
                           int n_iter, double* residual_out = nullptr);

}  // namespace pintswe::ml
