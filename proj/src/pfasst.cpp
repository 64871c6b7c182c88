#include "pintswe/pfasst.hpp"

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <deque>
#include <exception>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "pintswe/parallel.hpp"

namespace pintswe::pf {

namespace {

struct Message {
    PrognosticState value;
    int phase;
    int iteration;
    int level;
};

/// Single-producer single-consumer FIFO between adjacent workers. Sends never
/// block; receives block until a message arrives or the timeout expires.
class Channel {
public:
    void send(Message&& m) {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            queue_.push_back(std::move(m));
        }
        cv_.notify_one();
    }

    Message recv(double timeout_seconds) {
        std::unique_lock<std::mutex> lock(mutex_);
        if (!cv_.wait_for(lock, std::chrono::duration<double>(timeout_seconds),
                          [&] { return !queue_.empty(); }))
            throw std::runtime_error("pfasst: receive timed out, pipeline deadlock suspected");
        Message m = std::move(queue_.front());
        queue_.pop_front();
        return m;
    }

private:
    std::mutex mutex_;
    std::condition_variable cv_;
    std::deque<Message> queue_;
};

struct WorkerSlot {
    sdc::SpaceTimeState fine;
    sdc::SpaceTimeState coarse;
    std::vector<double> residuals;
    std::vector<MessageRecord> log;
};

struct BlockContext {
    const BlockConfig* cfg;
    const PrognosticState* theta0;
    std::vector<std::unique_ptr<Channel>> fine_ch;    // index = receiving worker
    std::vector<std::unique_ptr<Channel>> coarse_ch;  // index = receiving worker
    std::vector<WorkerSlot> slots;
    BlockTrace* trace = nullptr;
};

Message expect(Channel& ch, double timeout, int phase, int iteration, int level) {
    Message m = ch.recv(timeout);
    if (m.phase != phase || m.iteration != iteration || m.level != level)
        throw std::logic_error("pfasst: message tag mismatch");
    return m;
}

void worker_predict(BlockContext& ctx, int w) {
    const BlockConfig& cfg = *ctx.cfg;
    const ml::TransferPair& pair = cfg.levels;
    const int n = cfg.n_time_steps;
    WorkerSlot& slot = ctx.slots[w];
    slot.residuals.assign(cfg.n_iter + 1, 0.0);

    // Worker 0 broadcasts the block initial condition.
    if (w == 0)
        for (int r = 1; r < n; ++r)
            slot.log.push_back({0, 0, 'B', 0, r, 0, 0});

    // Restrict the initial condition and spread it over the coarse nodes.
    const PrognosticState theta0_c = ml::restrict_space(*ctx.theta0, pair.coarse.truncation);
    slot.coarse = sdc::spread(theta0_c, pair.coarse.num_nodes(), *pair.coarse.ode);

    // n+1 serial coarse sweeps for worker n, receiving the updated initial
    // condition before each sweep after the first.
    for (int q = 0; q <= w; ++q) {
        if (q >= 1) {
            Message m = expect(*ctx.coarse_ch[w], cfg.recv_timeout_seconds, 0, q - 1, 1);
            slot.coarse.state[0] = std::move(m.value);
            sdc::refresh_node(slot.coarse, 0, *pair.coarse.ode);
        }
        sdc::sweep(slot.coarse, cfg.dt, pair.coarse.tables, *pair.coarse.ode);
        if (w < n - 1) {
            ctx.coarse_ch[w + 1]->send(
                {slot.coarse.state[pair.coarse.num_nodes() - 1], 0, q, 1});
            slot.log.push_back({0, q, 'P', w, w + 1, 1, pair.coarse.num_nodes() - 1});
        }
    }

    // Interpolate the coarse prediction to the fine level and re-evaluate the
    // fine right-hand sides.
    slot.fine.state = ml::interpolate_states(slot.coarse.state, pair);
    const int mf = pair.fine.num_nodes();
    slot.fine.f_imp.resize(mf, PrognosticState(pair.fine.truncation));
    slot.fine.f_exp.resize(mf, PrognosticState(pair.fine.truncation));
    for (int m = 0; m < mf; ++m) sdc::refresh_node(slot.fine, m, *pair.fine.ode);

    slot.residuals[0] = sdc::collocation_residual(slot.fine, cfg.dt, pair.fine.tables);
    if (ctx.trace) ctx.trace->post_predict_fine[w] = slot.fine;
}

void worker_iterate(BlockContext& ctx, int w, int k) {
    const BlockConfig& cfg = *ctx.cfg;
    const ml::TransferPair& pair = cfg.levels;
    const int n = cfg.n_time_steps;
    const int mf = pair.fine.num_nodes();
    const int mc = pair.coarse.num_nodes();
    WorkerSlot& slot = ctx.slots[w];

    // Step A: fine sweep; on the final iteration stop here.
    sdc::sweep(slot.fine, cfg.dt, pair.fine.tables, *pair.fine.ode);
    slot.residuals[k] = sdc::collocation_residual(slot.fine, cfg.dt, pair.fine.tables);
    if (k == cfg.n_iter) return;
    if (w < n - 1) {
        ctx.fine_ch[w + 1]->send({slot.fine.state[mf - 1], 1, k, 0});
        slot.log.push_back({1, k, 'A', w, w + 1, 0, mf - 1});
    }

    // Step B: restrict in time and space, re-evaluate the coarse right-hand
    // sides, save the restriction, and compute the FAS correction.
    slot.coarse.state = ml::restrict_states(slot.fine.state, pair);
    for (int m = 0; m < mc; ++m) sdc::refresh_node(slot.coarse, m, *pair.coarse.ode);
    const sdc::SpaceTimeState saved = slot.coarse;
    const auto tau = ml::fas_correction(slot.fine, slot.coarse, cfg.dt, pair);

    // Step C: receive the new coarse initial condition, re-evaluate node 0,
    // coarse sweep with the FAS correction, send the last node forward.
    if (w > 0) {
        Message m = expect(*ctx.coarse_ch[w], cfg.recv_timeout_seconds, 1, k, 1);
        slot.coarse.state[0] = std::move(m.value);
    }
    sdc::refresh_node(slot.coarse, 0, *pair.coarse.ode);
    sdc::sweep(slot.coarse, cfg.dt, pair.coarse.tables, *pair.coarse.ode, &tau);
    if (w < n - 1) {
        ctx.coarse_ch[w + 1]->send({slot.coarse.state[mc - 1], 1, k, 1});
        slot.log.push_back({1, k, 'C', w, w + 1, 1, mc - 1});
    }

    // Step D: interpolate the coarse increments of state and right-hand
    // sides, then receive the new fine initial condition and apply the
    // node-0 increment to it.
    const auto dstate = ml::interpolate_increment(slot.coarse.state, saved.state, pair);
    const auto dfi = ml::interpolate_increment(slot.coarse.f_imp, saved.f_imp, pair);
    const auto dfe = ml::interpolate_increment(slot.coarse.f_exp, saved.f_exp, pair);
    for (int m = 0; m < mf; ++m) {
        slot.fine.state[m] += dstate[m];
        slot.fine.f_imp[m] += dfi[m];
        slot.fine.f_exp[m] += dfe[m];
    }
    if (w > 0) {
        Message m = expect(*ctx.fine_ch[w], cfg.recv_timeout_seconds, 1, k, 0);
        slot.fine.state[0] = std::move(m.value);
        slot.fine.state[0] += dstate[0];
    }
    sdc::refresh_node(slot.fine, 0, *pair.fine.ode);
}

void worker_main(BlockContext& ctx, int w) {
    worker_predict(ctx, w);
    for (int k = 1; k <= ctx.cfg->n_iter; ++k) worker_iterate(ctx, w, k);
}

int step_rank(char s) {
    switch (s) {
        case 'B': return 0;
        case 'P': return 1;
        case 'A': return 2;
        default: return 3;  // 'C'
    }
}

}  // namespace

BlockResult run_block(const BlockConfig& cfg, const PrognosticState& theta0, Mode mode,
                      BlockTrace* trace) {
    if (cfg.n_time_steps < 1) throw std::invalid_argument("run_block: need n_time_steps >= 1");
    if (cfg.n_iter < 1) throw std::invalid_argument("run_block: need n_iter >= 1");

    BlockContext ctx;
    ctx.cfg = &cfg;
    ctx.theta0 = &theta0;
    ctx.slots.resize(cfg.n_time_steps);
    ctx.fine_ch.resize(cfg.n_time_steps);
    ctx.coarse_ch.resize(cfg.n_time_steps);
    for (int w = 1; w < cfg.n_time_steps; ++w) {
        ctx.fine_ch[w] = std::make_unique<Channel>();
        ctx.coarse_ch[w] = std::make_unique<Channel>();
    }
    if (trace) trace->post_predict_fine.resize(cfg.n_time_steps);
    ctx.trace = trace;

    if (mode == Mode::serial_emulation || cfg.n_time_steps == 1) {
        // Fixed total order: workers to completion in index order. All
        // dependencies point forward, so every receive finds its message
        // already queued.
        for (int w = 0; w < cfg.n_time_steps; ++w) worker_main(ctx, w);
    } else {
        std::vector<std::thread> threads;
        std::vector<std::exception_ptr> errors(cfg.n_time_steps);
        threads.reserve(cfg.n_time_steps);
        for (int w = 0; w < cfg.n_time_steps; ++w) {
            threads.emplace_back([&ctx, &errors, w] {
                // Keep time-parallel workers from opening nested OpenMP teams.
                par::InnerParallelGuard guard(false);
                try {
                    worker_main(ctx, w);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : threads) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    BlockResult result;
    result.step_final.reserve(cfg.n_time_steps);
    result.residuals.reserve(cfg.n_time_steps);
    for (auto& slot : ctx.slots) {
        result.step_final.push_back(slot.fine.state[cfg.levels.fine.num_nodes() - 1]);
        result.residuals.push_back(std::move(slot.residuals));
        result.messages.insert(result.messages.end(), slot.log.begin(), slot.log.end());
    }
    std::sort(result.messages.begin(), result.messages.end(),
              [](const MessageRecord& a, const MessageRecord& b) {
                  return std::make_tuple(a.phase, a.iteration, a.sender, step_rank(a.step)) <
                         std::make_tuple(b.phase, b.iteration, b.sender, step_rank(b.step));
              });
    return result;
}

}  // namespace pintswe::pf
