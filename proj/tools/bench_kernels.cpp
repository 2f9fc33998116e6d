// Times the OpenMP kernels against their serial reference implementations
// and checks that both produce bit-identical results. "quick" as the first
// argument shrinks the workloads to smoke-test size.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "dupdel/adjacency_graph.hpp"
#include "dupdel/choice_stream.hpp"
#include "dupdel/graph_stats.hpp"
#include "dupdel/theory.hpp"

namespace {

using namespace dupdel;

template <class F>
double best_ms(F&& f, int reps) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void report(const char* name, double serial_ms, double parallel_ms, bool agree) {
    std::printf("%-28s %10.2f %12.2f %9.2fx   %s\n", name, serial_ms, parallel_ms, serial_ms / parallel_ms,
                agree ? "yes" : "NO");
}

}  // namespace

int main(int argc, char** argv) {
    const bool quick = argc > 1 && std::strcmp(argv[1], "quick") == 0;
    const int reps = quick ? 1 : 3;
    const std::uint64_t tri_steps = quick ? 20'000 : 150'000;
    const int quad_dmax = quick ? 60 : 150;
    const int fp_kmax = quick ? 400 : 1200;

    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-28s %10s %12s %10s   %s\n", "kernel", "serial_ms", "parallel_ms", "speedup", "agree");

    {
        AdjacencyGraph g;
        ChoiceStream picks(7);
        for (std::uint64_t n = 1; n <= tri_steps; ++n) g.step(picks.next(static_cast<std::uint32_t>(n)));
        std::vector<std::uint64_t> serial, parallel;
        const double s = best_ms([&] { serial = local_triangles_serial(g); }, reps);
        const double p = best_ms([&] { parallel = local_triangles(g); }, reps);
        report(("triangles n=" + std::to_string(tri_steps)).c_str(), s, p, serial == parallel);
    }
    {
        std::vector<double> serial, parallel;
        const double s = best_ms([&] { serial = cd_table_quadrature_serial(quad_dmax, 1e-10); }, reps);
        const double p = best_ms([&] { parallel = cd_table_quadrature(quad_dmax, 1e-10); }, reps);
        report(("quadrature dmax=" + std::to_string(quad_dmax)).c_str(), s, p, serial == parallel);
    }
    {
        FixedPointOptions serial_opts;
        serial_opts.parallel = false;
        FixedPointResult serial, parallel;
        const double s = best_ms([&] { serial = fixed_point_yk(fp_kmax, 1e-8, serial_opts); }, reps);
        const double p = best_ms([&] { parallel = fixed_point_yk(fp_kmax, 1e-8); }, reps);
        report(("fixed point kmax=" + std::to_string(fp_kmax)).c_str(), s, p,
               serial.y == parallel.y && serial.sweeps == parallel.sweeps);
    }
    return 0;
}
