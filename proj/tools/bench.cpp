// Benchmark comparing the OpenMP kernels against their serial reference
// implementations. Results must agree bit for bit; the table reports wall
// times and speedups.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lrw/intervals.hpp"
#include "lrw/stability.hpp"
#include "lrw/width.hpp"

using namespace lrw;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Graph random_graph(int n, int percent, std::mt19937_64& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((int)(rng() % 100) < percent) g.add_edge(u, v);
    return g;
}

void report(const char* name, double serial_ms, double parallel_ms, bool equal) {
    std::printf("%-34s %10.1f ms %10.1f ms %7.2fx   %s\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms, equal ? "results equal" : "RESULTS DIFFER");
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run serially\n\n");
#endif
    std::printf("%-34s %13s %13s %8s\n", "kernel", "serial", "parallel", "speedup");

    std::mt19937_64 rng(12345);

    {
        Graph g = random_graph(18, 50, rng);
        auto t0 = Clock::now();
        LinearWidthResult serial = linear_rankwidth_exact_serial(g);
        const double serial_ms = ms_since(t0);
        t0 = Clock::now();
        LinearWidthResult parallel = linear_rankwidth_exact(g);
        const double parallel_ms = ms_since(t0);
        report("linear rankwidth DP (n=18)", serial_ms, parallel_ms,
               serial.width == parallel.width && serial.order == parallel.order);
    }

    {
        Graph p4 = path_graph(4);
        auto t0 = Clock::now();
        RamseyCheck serial = verify_vertex_ramsey_serial(p4, 2);
        const double serial_ms = ms_since(t0);
        t0 = Clock::now();
        RamseyCheck parallel = verify_vertex_ramsey(p4, 2);
        const double parallel_ms = ms_since(t0);
        report("vertex Ramsey (P4, m=2)", serial_ms, parallel_ms,
               serial.ok == parallel.ok && serial.witness == parallel.witness);
    }

    {
        Graph g = random_graph(14, 45, rng);
        LinearWidthResult res = linear_rankwidth_exact(g);
        IntervalFamily fam =
            build_interval_graph(analyze(OrderedGraph::with_order(g, res.order)));
        CenteredColoring col = p_centered_coloring(fam, 3);
        auto t0 = Clock::now();
        CenteredCheck serial = verify_centered_serial(fam.h, col.colors, 4);
        const double serial_ms = ms_since(t0);
        t0 = Clock::now();
        CenteredCheck parallel = verify_centered(fam.h, col.colors, 4);
        const double parallel_ms = ms_since(t0);
        report("centered verification (n=14)", serial_ms, parallel_ms,
               serial.ok == parallel.ok && serial.witness == parallel.witness);
    }

    return 0;
}
