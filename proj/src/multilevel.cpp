#include "pintswe/multilevel.hpp"

#include <stdexcept>

namespace pintswe::ml {

namespace {

Matrix lagrange_matrix(const std::vector<double>& from_nodes, const std::vector<double>& to_nodes) {
    Matrix pi(static_cast<int>(to_nodes.size()), static_cast<int>(from_nodes.size()));
    for (int i = 0; i < pi.rows; ++i)
        for (int j = 0; j < pi.cols; ++j) pi(i, j) = lagrange_basis(from_nodes, j, to_nodes[i]);
    return pi;
}

bool supported_node_pair(int fine_nodes, int coarse_nodes) {
    if (fine_nodes == coarse_nodes) return true;
    return (fine_nodes == 3 && coarse_nodes == 2) || (fine_nodes == 5 && coarse_nodes == 3);
}

// Linear combination of states across nodes: out_i = sum_j pi(i, j) in_j.
std::vector<PrognosticState> apply_time_matrix(const Matrix& pi,
                                               const std::vector<PrognosticState>& in) {
    std::vector<PrognosticState> out;
    out.reserve(pi.rows);
    for (int i = 0; i < pi.rows; ++i) {
        PrognosticState acc(in[0].truncation());
        for (int j = 0; j < pi.cols; ++j)
            if (pi(i, j) != 0.0) acc.axpy(pi(i, j), in[j]);
        out.push_back(std::move(acc));
    }
    return out;
}

}  // namespace

TransferPair make_transfer_pair(LevelSpec fine, LevelSpec coarse) {
    if (coarse.truncation > fine.truncation)
        throw std::invalid_argument("make_transfer_pair: coarse truncation exceeds fine");
    if (coarse.truncation < 1)
        throw std::invalid_argument("make_transfer_pair: coarse truncation must be >= 1");
    if (!supported_node_pair(fine.num_nodes(), coarse.num_nodes()))
        throw std::invalid_argument("make_transfer_pair: unsupported node pair");
    TransferPair pair;
    pair.time_restrict = lagrange_matrix(fine.tables.nodes, coarse.tables.nodes);
    pair.time_interp = lagrange_matrix(coarse.tables.nodes, fine.tables.nodes);
    pair.qf_time_restricted = matmul(pair.time_restrict, fine.tables.q);
    pair.fine = std::move(fine);
    pair.coarse = std::move(coarse);
    return pair;
}

SpectralField restrict_space(const SpectralField& x, int coarse_truncation) {
    SpectralField y(coarse_truncation);
    for (int r = 0; r <= coarse_truncation; ++r)
        for (int s = r; s <= coarse_truncation; ++s) y.at(r, s) = x.at(r, s);
    return y;
}

SpectralField interpolate_space(const SpectralField& x, int fine_truncation) {
    SpectralField y(fine_truncation);
    const int rc = x.truncation();
    for (int r = 0; r <= rc; ++r)
        for (int s = r; s <= rc; ++s) y.at(r, s) = x.at(r, s);
    return y;
}

PrognosticState restrict_space(const PrognosticState& x, int coarse_truncation) {
    PrognosticState y;
    y.phi = restrict_space(x.phi, coarse_truncation);
    y.vort = restrict_space(x.vort, coarse_truncation);
    y.div = restrict_space(x.div, coarse_truncation);
    return y;
}

PrognosticState interpolate_space(const PrognosticState& x, int fine_truncation) {
    PrognosticState y;
    y.phi = interpolate_space(x.phi, fine_truncation);
    y.vort = interpolate_space(x.vort, fine_truncation);
    y.div = interpolate_space(x.div, fine_truncation);
    return y;
}

sdc::SpaceTimeState restrict_time(const sdc::SpaceTimeState& sts, const TransferPair& pair) {
    sdc::SpaceTimeState out;
    out.state = apply_time_matrix(pair.time_restrict, sts.state);
    out.f_imp = apply_time_matrix(pair.time_restrict, sts.f_imp);
    out.f_exp = apply_time_matrix(pair.time_restrict, sts.f_exp);
    return out;
}

sdc::SpaceTimeState interpolate_time(const sdc::SpaceTimeState& sts, const TransferPair& pair) {
    sdc::SpaceTimeState out;
    out.state = apply_time_matrix(pair.time_interp, sts.state);
    out.f_imp = apply_time_matrix(pair.time_interp, sts.f_imp);
    out.f_exp = apply_time_matrix(pair.time_interp, sts.f_exp);
    return out;
}

std::vector<PrognosticState> restrict_states(const std::vector<PrognosticState>& fine_states,
                                             const TransferPair& pair) {
    auto combined = apply_time_matrix(pair.time_restrict, fine_states);
    std::vector<PrognosticState> out;
    out.reserve(combined.size());
    for (auto& s : combined) out.push_back(restrict_space(s, pair.coarse.truncation));
    return out;
}

std::vector<PrognosticState> fas_correction(const sdc::SpaceTimeState& fine_sts,
                                            const sdc::SpaceTimeState& coarse_sts, double dt,
                                            const TransferPair& pair) {
    const int mc = pair.coarse.num_nodes();
    const int mf = pair.fine.num_nodes();
    std::vector<PrognosticState> tau;
    tau.reserve(mc);
    for (int i = 0; i < mc; ++i) {
        // dt * restrict( (Pi Q_f (x) I) F_f )_i
        PrognosticState acc_f(pair.fine.truncation);
        for (int j = 0; j < mf; ++j) {
            const double w = pair.qf_time_restricted(i, j);
            if (w == 0.0) continue;
            acc_f.axpy(w, fine_sts.f_imp[j]);
            acc_f.axpy(w, fine_sts.f_exp[j]);
        }
        PrognosticState t = restrict_space(acc_f, pair.coarse.truncation);
        // minus dt * (Q_c (x) I) F_c at the restricted states
        for (int j = 0; j < mc; ++j) {
            const double w = pair.coarse.tables.q(i, j);
            if (w == 0.0) continue;
            t.axpy(-w, coarse_sts.f_imp[j]);
            t.axpy(-w, coarse_sts.f_exp[j]);
        }
        t *= dt;
        tau.push_back(std::move(t));
    }
    return tau;
}

std::vector<PrognosticState> interpolate_increment(const std::vector<PrognosticState>& coarse_new,
                                                   const std::vector<PrognosticState>& coarse_saved,
                                                   const TransferPair& pair) {
    std::vector<PrognosticState> delta;
    delta.reserve(coarse_new.size());
    for (std::size_t i = 0; i < coarse_new.size(); ++i) {
        PrognosticState d = coarse_new[i];
        d -= coarse_saved[i];
        delta.push_back(interpolate_space(d, pair.fine.truncation));
    }
    return apply_time_matrix(pair.time_interp, delta);
}

std::vector<PrognosticState> interpolate_states(const std::vector<PrognosticState>& coarse_states,
                                                const TransferPair& pair) {
    std::vector<PrognosticState> padded;
    padded.reserve(coarse_states.size());
    for (const auto& s : coarse_states) padded.push_back(interpolate_space(s, pair.fine.truncation));
    return apply_time_matrix(pair.time_interp, padded);
}

PrognosticState mlsdc_step(const PrognosticState& theta0, double dt, const TransferPair& pair,
                           int n_iter, double* residual_out) {
    const int mf = pair.fine.num_nodes();
    const int mc = pair.coarse.num_nodes();
    sdc::SpaceTimeState fine = sdc::spread(theta0, mf, *pair.fine.ode);

    sdc::SpaceTimeState coarse;
    for (int k = 0; k < n_iter; ++k) {
        sdc::sweep(fine, dt, pair.fine.tables, *pair.fine.ode);

        coarse.state = restrict_states(fine.state, pair);
        if (k == 0) {
            coarse.f_imp.resize(mc, PrognosticState(pair.coarse.truncation));
            coarse.f_exp.resize(mc, PrognosticState(pair.coarse.truncation));
            sdc::refresh_node(coarse, 0, *pair.coarse.ode);
        }
        // Node 0 never changes in the serial scheme; its right-hand sides stay valid.
        for (int m = 1; m < mc; ++m) sdc::refresh_node(coarse, m, *pair.coarse.ode);
        const sdc::SpaceTimeState saved = coarse;
        const auto tau = fas_correction(fine, coarse, dt, pair);

        sdc::sweep(coarse, dt, pair.coarse.tables, *pair.coarse.ode, &tau);

        const auto dstate = interpolate_increment(coarse.state, saved.state, pair);
        const auto dfi = interpolate_increment(coarse.f_imp, saved.f_imp, pair);
        const auto dfe = interpolate_increment(coarse.f_exp, saved.f_exp, pair);
        for (int m = 0; m < mf; ++m) {
            fine.state[m] += dstate[m];
            fine.f_imp[m] += dfi[m];
            fine.f_exp[m] += dfe[m];
        }
    }
    if (residual_out) *residual_out = sdc::collocation_residual(fine, dt, pair.fine.tables);
    return fine.state[mf - 1];
}

}  // namespace pintswe::ml
