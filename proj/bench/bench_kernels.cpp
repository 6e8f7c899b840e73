// Serial vs OpenMP comparison for the data-parallel kernels. Run manually:
//   ./build/bench/bench_kernels [n_scale]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "fireline/analysis.hpp"
#include "fireline/census.hpp"
#include "fireline/expansion.hpp"
#include "fireline/pairing.hpp"
#include "fireline/strategies.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace fireline;

namespace {

template <typename F>
double time_ms(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-28s %10.1f ms %10.1f ms %8.2fx\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms);
}

} // namespace

int main(int argc, char** argv) {
    int scale = argc > 1 ? std::atoi(argv[1]) : 200;
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run serially\n");
#endif
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    Rng rng(1);
    Graph big = sample_simple_graph(PairingConfig{scale, 3, 1, 100000}, rng);
    int cutoff = std::max(3, static_cast<int>(short_cycle_cutoff(3, big.n())) + 2);

    {
        CycleCensus a, b;
        double s = time_ms([&] { a = short_cycle_census(big, cutoff, Exec::serial); });
        double p = time_ms([&] { b = short_cycle_census(big, cutoff, Exec::parallel); });
        if (a.count != b.count) std::abort();
        row("short_cycle_census", s, p);
    }
    {
        PairingConfig cfg{100, 3, 7, 1};
        SimplicityStats a, b;
        double s = time_ms([&] { a = simplicity_rate(cfg, 20000, Exec::serial); });
        double p = time_ms([&] { b = simplicity_rate(cfg, 20000, Exec::parallel); });
        if (a.simple_count != b.simple_count) std::abort();
        row("simplicity_rate (20k)", s, p);
    }
    {
        RateReport a, b;
        double s = time_ms([&] {
            a = rho_monte_carlo(big, 2, greedy_strategy(), "greedy", 0, 3, true, Exec::serial);
        });
        double p = time_ms([&] {
            b = rho_monte_carlo(big, 2, greedy_strategy(), "greedy", 0, 3, true, Exec::parallel);
        });
        if (a.rho != b.rho) std::abort();
        row("rho_monte_carlo sweep", s, p);
    }
    {
        Rng r2(5);
        Graph small = gnm_random_graph(14, 24, r2);
        RateReport a, b;
        double s = time_ms([&] { a = rho_exact(small, 3, SolveOptions{}, Exec::serial); });
        double p = time_ms([&] { b = rho_exact(small, 3, SolveOptions{}, Exec::parallel); });
        if (a.rho_rational != b.rho_rational) std::abort();
        row("rho_exact (n=14, k=3)", s, p);
    }
    {
        ExpansionReport a, b;
        Rng r3(11);
        Graph g = sample_simple_graph(PairingConfig{6, 3, 11, 100000}, r3);
        double s = time_ms([&] { a = check_joint_expansion(g, 0.088, 7, 20000, 1, Exec::serial); });
        double p = time_ms([&] { b = check_joint_expansion(g, 0.088, 7, 20000, 1, Exec::parallel); });
        if (a.subsets_checked != b.subsets_checked) std::abort();
        row("check_joint_expansion", s, p);
    }
    return 0;
}
