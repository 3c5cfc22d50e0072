// Timing harness for the two parallel kernels against their serial
// reference paths: per-degree spectral ranks and witness restarts.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "flipstiefel/spectral.hpp"
#include "flipstiefel/witness.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

template <typename F>
double time_call(F&& f) {
    const auto start = clock_type::now();
    f();
    return seconds_since(start);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp: %d threads\n", omp_get_max_threads());
#else
    std::printf("openmp: unavailable (serial build)\n");
#endif

    std::printf("\n%-34s %10s %10s %8s\n", "kernel", "serial", "parallel", "speedup");

    {
        const int n = 12, k = 5;
        flipstiefel::GradedDims serial_dims, parallel_dims;
        const double ts =
            time_call([&] { serial_dims = flipstiefel::e_infinity_dims_serial(n, k); });
        const double tp = time_call([&] { parallel_dims = flipstiefel::e_infinity_dims(n, k); });
        std::printf("%-34s %9.3fs %9.3fs %7.2fx%s\n", "spectral ranks FV_{12,10}", ts, tp,
                    ts / tp, serial_dims == parallel_dims ? "" : "  MISMATCH");
    }

    {
        const int n = 10, k = 2, m = 3;
        const auto map = flipstiefel::SmoothMap::random(n, m, 20240);
        const auto problem = flipstiefel::WitnessProblem::make(n, k, m, map);
        flipstiefel::SolveBudget budget;
        budget.max_restarts = 64;
        flipstiefel::WitnessResult rs, rp;
        const double ts = time_call([&] { rs = flipstiefel::solve_serial(problem, budget, 7); });
        const double tp = time_call([&] { rp = flipstiefel::solve(problem, budget, 7); });
        const bool same = rs.residual == rp.residual && rs.iterations == rp.iterations;
        std::printf("%-34s %9.3fs %9.3fs %7.2fx%s\n", "witness restarts FV_{10,4} -> R^3", ts, tp,
                    ts / tp, same ? "" : "  MISMATCH");
    }

    return 0;
}
