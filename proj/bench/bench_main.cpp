// Times the OpenMP kernels against their serial reference implementations:
// adjacency construction, clique counting, sampling, and the Ramsey search
// at one versus all workers.  Run with no arguments; prints one table row
// per kernel.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cubegraph/graph.hpp"
#include "cubegraph/ramsey.hpp"
#include "cubegraph/random_model.hpp"

using namespace cubegraph;

namespace {

double now() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

template <typename F>
double time_best_of(int reps, F&& f) {
    double best = 1e30;
    for (int i = 0; i < reps; ++i) {
        double t0 = now();
        f();
        best = std::min(best, now() - t0);
    }
    return best;
}

void report(const std::string& name, double serial, double parallel) {
    std::printf("%-28s %10.4fs %10.4fs %8.2fx\n", name.c_str(), serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled: parallel kernels run serially\n");
#endif
    std::printf("%-28s %11s %11s %9s\n", "kernel", "serial", "parallel", "speedup");

    RandomModelParams params;
    params.n = 3000;
    params.d = 32;
    params.p = 0.2;
    params.seed = 1;
    CubeFamily fam = sample_family(params);

    long long sink = 0;  // library calls cross a TU boundary, not elidable

    double s = time_best_of(3, [&] { sink += build_graph_serial(fam).edges(); });
    double p = time_best_of(3, [&] { sink += build_graph(fam).edges(); });
    report("build_graph n=3000 d=32", s, p);

    RandomModelParams cp;
    cp.n = 400;
    cp.d = 10;
    cp.p = 0.18;
    cp.seed = 7;
    IntersectionGraph dense = build_graph(sample_family(cp));
    s = time_best_of(3, [&] { sink += count_cliques_serial(dense, 5); });
    p = time_best_of(3, [&] { sink += count_cliques(dense, 5); });
    report("count_cliques size=5 n=400", s, p);

    RandomModelParams big;
    big.n = 2000000;
    big.d = 24;
    big.p = 0.25;
    big.seed = 3;
#ifdef _OPENMP
    int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    s = time_best_of(3, [&] { sink += sample_family(big).size(); });
    omp_set_num_threads(saved);
    p = time_best_of(3, [&] { sink += sample_family(big).size(); });
#else
    s = time_best_of(3, [&] { sink += sample_family(big).size(); });
    p = s;
#endif
    report("sample_family n=2e6 d=24", s, p);

    SearchOptions one;
    one.workers = 1;
    SearchOptions many;
    s = time_best_of(1, [&] { sink += ramsey_exact(3, 6, 3, one).value; });
    p = time_best_of(1, [&] { sink += ramsey_exact(3, 6, 3, many).value; });
    report("ramsey_exact R_3(6,3)", s, p);

    return sink == -1 ? 1 : 0;
}
