// Times the OpenMP kernels against their serial reference twins on a seeded
// synthetic slot graph and checks the outputs still agree.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "tempocent/centrality.hpp"
#include "tempocent/graph.hpp"
#include "tempocent/reference.hpp"
#include "tempocent/threading.hpp"

using namespace tempocent;
using h_clock = std::chrono::high_resolution_clock;

namespace {

double ms_since(h_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(h_clock::now() - t0).count();
}

AdjacencyMatrix random_adjacency(std::uint32_t n, double density, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    AdjacencyMatrix a(n);
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) {
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u < density) {
                const double w = 1.0 + static_cast<double>(rng() >> 11) * 0x1.0p-53 * 9.0;
                a.set(i, j, w);
            }
        }
    }
    return a;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

template <typename SerialFn, typename ParallelFn>
void run(const char* name, SerialFn serial, ParallelFn parallel) {
    auto t0 = h_clock::now();
    const auto ref = serial();
    const double serial_ms = ms_since(t0);

    t0 = h_clock::now();
    const auto par = parallel();
    const double parallel_ms = ms_since(t0);

    std::printf("%-14s %10.1f ms %10.1f ms   x%-5.2f  max|diff| %.3g\n", name, serial_ms,
                parallel_ms, serial_ms / parallel_ms, max_abs_diff(ref, par));
}

}  // namespace

int main(int argc, char** argv) {
    apply_thread_env();
    std::uint32_t n = 1200;
    double density = 0.05;
    std::uint64_t seed = 7;
    for (int k = 1; k + 1 < argc; k += 2) {
        const std::string flag = argv[k];
        if (flag == "--nodes") n = static_cast<std::uint32_t>(std::stoul(argv[k + 1]));
        if (flag == "--density") density = std::stod(argv[k + 1]);
        if (flag == "--seed") seed = std::stoull(argv[k + 1]);
    }

    const auto a = random_adjacency(n, density, seed);
    const auto bg = binarize(a, 0.0);
    PowerIterationConfig cfg;
    cfg.max_iters = 2000;

    std::printf("n=%u density=%.3f edges=%zu workers=%d\n", n, density, bg.edge_count(),
                worker_count());
    std::printf("%-14s %13s %13s %8s\n", "kernel", "serial", "openmp", "speedup");

    run(
        "closeness", [&] { return reference::closeness_scores(bg).scores; },
        [&] { return closeness_scores(bg).scores; });
    run(
        "betweenness", [&] { return reference::betweenness_scores(bg); },
        [&] { return betweenness_scores(bg); });
    run(
        "eigenvector", [&] { return reference::eigenvector_scores(a, cfg).scores; },
        [&] { return eigenvector_scores(a, cfg).scores; });
    run(
        "pagerank", [&] { return reference::pagerank_scores(a, 0.85, cfg).scores; },
        [&] { return pagerank_scores(a, 0.85, cfg).scores; });
    return 0;
}
