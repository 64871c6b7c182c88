#pragma once

namespace pintswe::par {

/// Whether the data-parallel transform kernels may open OpenMP regions on the
/// calling thread. PFASST worker threads switch this off so that time-parallel
/// workers do not oversubscribe the machine with nested teams. The flag only
/// affects scheduling: kernel results are bitwise independent of it because
/// every parallel loop assigns disjoint outputs with serial inner reductions.
bool inner_enabled();
void set_inner_enabled(bool on);

struct InnerParallelGuard {
    explicit InnerParallelGuard(bool on) : saved_(inner_enabled()) { set_inner_enabled(on); }
    ~InnerParallelGuard() { set_inner_enabled(saved_); }
    InnerParallelGuard(const InnerParallelGuard&) = delete;
    InnerParallelGuard& operator=(const InnerParallelGuard&) = delete;

private:
    bool saved_;
};

}  // namespace pintswe::par
