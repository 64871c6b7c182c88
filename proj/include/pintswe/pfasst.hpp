#pragma once

#include <string>
#include <vector>

#include "pintswe/multilevel.hpp"
#include "pintswe/sdc.hpp"

namespace pintswe::pf {

enum class Mode { threaded, serial_emulation };

/// One block of n_ts time steps solved in parallel, one worker per step.
struct BlockConfig {
    int n_time_steps = 1;   // workers
    double dt = 0.0;
    int n_iter = 1;         // fixed iteration count N_PF
    ml::TransferPair levels;
    double recv_timeout_seconds = 300.0;  // deadlock guard in threaded mode
};

/// One message of the forward-only pipeline, recorded at the sender.
struct MessageRecord {
    int phase;      // 0 = prediction, 1 = iteration
    int iteration;  // prediction sweep round or PFASST iteration index
    char step;      // 'B' broadcast, 'P' prediction sweep, 'A' fine, 'C' coarse
    int sender;
    int receiver;
    int level;      // 0 = fine, 1 = coarse
    int node;       // node index of the value sent
};

struct BlockResult {
    /// Fine last-node value of each time step of the block.
    std::vector<PrognosticState> step_final;
    /// Fine-level collocation residuals per worker; entry 0 is the
    /// post-prediction residual, entry k the residual after iteration k.
    /// Diagnostics only: the iteration count is fixed and never depends on
    /// these values.
    std::vector<std::vector<double>> residuals;
    /// Message log merged in the fixed total order (phase, iteration, sender,
    /// step); identical between execution modes.
    std::vector<MessageRecord> messages;
};

/// Optional capture of per-worker states for tests and diagnostics.
struct BlockTrace {
    std::vector<sdc::SpaceTimeState> post_predict_fine;
};

/// Runs the prediction step and n_iter PFASST iterations on a block.
/// Successive blocks chain by feeding step n_ts-1's result into the next
/// block's initial condition. The serial-emulation mode executes the workers
/// in a fixed total order on one thread and produces bit-identical results.
BlockResult run_block(const BlockConfig& cfg, const PrognosticState& theta0, Mode mode,
                      BlockTrace* trace = nullptr);

}  // namespace pintswe::pf
