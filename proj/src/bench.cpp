#include "gs/bench.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <random>

#include "gs/integrator.hpp"
#include "gs/operators.hpp"

namespace gs {

namespace {

Field random_nonnegative(int n, std::mt19937_64& rng) {
    Field f(n, n);
    for (double& x : f.data()) {
        x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    }
    return f;
}

struct Timing {
    double mean_ns = 0.0;
    long reps = 0;
};

// Repeat until ~100 ms of samples or 64 reps, whichever comes first.
Timing time_op(const std::function<void()>& op) {
    using clock = std::chrono::steady_clock;
    op(); // warm caches and FFT plans
    Timing t;
    double total_ns = 0.0;
    while (t.reps < 64 && total_ns < 1e8) {
        const auto begin = clock::now();
        op();
        const auto end = clock::now();
        total_ns += std::chrono::duration<double, std::nano>(end - begin).count();
        ++t.reps;
    }
    t.mean_ns = total_ns / static_cast<double>(t.reps);
    return t;
}

} // namespace

void run_bench(const SimConfig& cfg, std::ostream& out) {
    out << "size,op,mean_ns,reps\n";
    std::mt19937_64 rng(cfg.seed.rng_seed);
    for (int n : {16, 32, 64}) {
        const double h = cfg.lattice.spacing;
        const DiscreteKernel kernel =
            build_gaussian_kernel(KernelSpec{cfg.epsilon, n, n, h});
        const Field f = random_nonnegative(n, rng);
        SimState state;
        state.u = random_nonnegative(n, rng);
        state.v = random_nonnegative(n, rng);

        ModelParams p = cfg.params;
        p.h = h;
        p.dt = 1e-3; // keep the benched trajectory finite regardless of config

        const std::pair<const char*, std::function<void()>> ops[] = {
            {"convolve_spectral", [&] { convolve_spectral(kernel, f); }},
            {"convolve_direct", [&] { convolve_direct(kernel, f); }},
            {"step_local", [&] { step_local(state, p); }},
            {"step_mixed", [&] { step_mixed(state, p, kernel); }},
        };
        for (const auto& [name, op] : ops) {
            const Timing t = time_op(op);
            out << n << ',' << name << ',' << static_cast<long long>(t.mean_ns)
                << ',' << t.reps << '\n';
        }
    }
}

} // namespace gs
