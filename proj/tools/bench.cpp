// Times the OpenMP evaluation/gradient-check kernels against their serial
// reference paths and verifies both produce identical results.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "coverbot/net.hpp"
#include "coverbot/rng.hpp"
#include "coverbot/runner.hpp"

using namespace coverbot;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void report(const char* name, double serial_ms, double parallel_ms, bool equal) {
    std::printf("%-22s serial %8.1f ms   parallel %8.1f ms   speedup %.2fx   %s\n", name,
                serial_ms, parallel_ms, serial_ms / parallel_ms,
                equal ? "results equal" : "RESULTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
    int episodes = 200;
    std::uint64_t seed = 1;
    for (int i = 1; i + 1 < argc; i += 2) {
        if (std::strcmp(argv[i], "--episodes") == 0) episodes = std::atoi(argv[i + 1]);
        if (std::strcmp(argv[i], "--seed") == 0) seed = std::strtoull(argv[i + 1], nullptr, 10);
    }

#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel paths run serially\n");
#endif

    EvalConfig cfg;
    cfg.episodes = episodes;
    cfg.master_seed = seed;

    {
        cfg.parallel = false;
        auto t0 = Clock::now();
        const EvalResult serial = evaluate_baseline(cfg);
        const double serial_ms = ms_since(t0);

        cfg.parallel = true;
        t0 = Clock::now();
        const EvalResult parallel = evaluate_baseline(cfg);
        report("evaluate_baseline", serial_ms, ms_since(t0), serial.episodes == parallel.episodes);
    }

    {
        const DenseNet net = init_net(seed);
        cfg.parallel = false;
        auto t0 = Clock::now();
        const EvalResult serial = evaluate_dqn(net, cfg);
        const double serial_ms = ms_since(t0);

        cfg.parallel = true;
        t0 = Clock::now();
        const EvalResult parallel = evaluate_dqn(net, cfg);
        report("evaluate_dqn", serial_ms, ms_since(t0), serial.episodes == parallel.episodes);
    }

    {
        const DenseNet net = init_net(seed);
        Rng rng(seed);
        InputVec x;
        for (double& v : x) v = rng.uniform(-1.0, 2.0);

        const int reps = 20;
        auto t0 = Clock::now();
        double serial_err = 0.0;
        for (int i = 0; i < reps; ++i)
            serial_err = grad_check(net, x, Action::Forward, 1.5, /*parallel=*/false);
        const double serial_ms = ms_since(t0);

        t0 = Clock::now();
        double parallel_err = 0.0;
        for (int i = 0; i < reps; ++i)
            parallel_err = grad_check(net, x, Action::Forward, 1.5, /*parallel=*/true);
        report("grad_check", serial_ms, ms_since(t0), serial_err == parallel_err);
    }

    return 0;
}
