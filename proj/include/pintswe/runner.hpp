#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pintswe/analysis.hpp"
#include "pintswe/cases.hpp"
#include "pintswe/field.hpp"
#include "pintswe/swe.hpp"

namespace pintswe::runner {

struct RunConfig {
    std::string case_name = "gaussian";  // gaussian | rossby | galewsky
    std::string scheme = "sdc";          // sdc | mlsdc | pfasst
    int r_fine = 32;
    int nodes_fine = 5;    // M_f + 1
    int nodes_coarse = 3;  // M_c + 1 (mlsdc / pfasst)
    double alpha = 1.0;    // R_c / R_f coarsening ratio
    double dt = 100.0;
    double t_end = 102400.0;
    int n_ts = 1;          // time steps per pfasst block (= workers)
    int iterations = 8;    // N_S / N_ML / N_PF
    double nu = 1e5;       // m^2/s
    double radius = 6.37122e6;
    double omega = 7.292e-5;
    double gravity = 9.80616;
    std::string mode = "parallel";  // parallel | serial-emulation (pfasst)
    std::string out_dir;            // empty: no artifacts written
    std::string ref_path;           // reference checkpoint for error tables
    int r_norm = 32;

    cases::GaussianDomeParams gaussian;
    cases::RossbyHaurwitzParams rossby;
    cases::GalewskyParams galewsky;
};

struct RunResult {
    PrognosticState final_state;
    double wall_seconds = 0.0;
    /// pfasst: one entry per block with the per-worker residual trajectories
    /// flattened; serial schemes: one final residual per step.
    std::vector<double> residual_history;
    std::optional<analysis::ErrorReport> error;
};

/// Coarse truncation implied by the coarsening ratio (rounded).
int coarse_truncation(int r_fine, double alpha);

/// Rejects invalid configurations with actionable messages.
void validate(const RunConfig& cfg);

/// Runs the configured scheme over [0, t_end] and writes the requested
/// artifacts (final checkpoint, spectrum CSV, error CSV, message log,
/// run metadata) into out_dir.
RunResult run(const RunConfig& cfg);

}  // namespace pintswe::runner
