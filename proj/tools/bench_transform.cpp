// Compares the OpenMP transform kernels against the serial reference
// implementation and against the kernels with inner parallelism disabled.
// Usage: bench_transform [R ...]   (default: 31 63 127)

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "pintswe/parallel.hpp"
#include "pintswe/reference.hpp"
#include "pintswe/swe.hpp"
#include "pintswe/transform.hpp"

using namespace pintswe;

namespace {

SpectralField random_field(int truncation, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist;
    SpectralField x(truncation);
    for (int r = 0; r <= truncation; ++r)
        for (int s = r; s <= truncation; ++s)
            x.at(r, s) = {dist(rng), r == 0 ? 0.0 : dist(rng)};
    return x;
}

template <class F>
double time_best_of(int reps, F&& fn) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> truncations;
    for (int i = 1; i < argc; ++i) truncations.push_back(std::atoi(argv[i]));
    if (truncations.empty()) truncations = {31, 63, 127};

    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%6s %6s %6s | %12s %12s %12s | %12s %12s\n", "R", "nlat", "nlon", "omp (s)",
                "1-thread (s)", "reference(s)", "roundtrip", "nonlin omp");
    for (int R : truncations) {
        TransformPlan plan(R);
        const SpectralField x = random_field(R, 42);

        const double t_omp = time_best_of(5, [&] {
            GridField g = plan.synthesise(x);
            volatile double sink = plan.analyse(g).max_abs();
            (void)sink;
        });
        const double t_serial = time_best_of(5, [&] {
            par::InnerParallelGuard guard(false);
            GridField g = plan.synthesise(x);
            volatile double sink = plan.analyse(g).max_abs();
            (void)sink;
        });
        const double t_ref = time_best_of(2, [&] {
            const auto vals = reference::synthesise(x, plan.latitudes().mu, plan.nlon());
            volatile double sink = reference::analyse(vals, plan.latitudes().mu,
                                                      plan.latitudes().weight, plan.nlon(), R)
                                       .max_abs();
            (void)sink;
        });

        // Round-trip error of the production path as a sanity print.
        GridField g = plan.synthesise(x);
        SpectralField back = plan.analyse(g);
        back -= x;
        const double err = back.max_abs() / x.max_abs();

        ModelParams params;
        params.nu = 1e5;
        PrognosticState state(R);
        state.phi = random_field(R, 1);
        state.vort = random_field(R, 2);
        state.vort *= 1e-5;
        state.div = random_field(R, 3);
        state.div *= 1e-5;
        const double t_nl = time_best_of(3, [&] {
            volatile double sink = eval_nonlinear(state, params, plan).max_abs();
            (void)sink;
        });

        std::printf("%6d %6d %6d | %12.6f %12.6f %12.6f | %12.2e %12.6f\n", R, plan.nlat(),
                    plan.nlon(), t_omp, t_serial, t_ref, err, t_nl);
    }
    return 0;
}
