// Serial reference implementations timed against the OpenMP kernels on
// fixed mid-size instances, with an agreement check per row.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include <omp.h>

#include "forb/counting.hpp"
#include "forb/distance.hpp"
#include "forb/estimator.hpp"
#include "forb/generate.hpp"
#include "forb/homomorphism.hpp"
#include "forb/rand.hpp"

using namespace forb;

namespace {

double time_ms(const std::function<void()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void row(const std::string& name, double serial_ms, double parallel_ms, bool match) {
    std::printf("%-34s %10.1f %12.1f %8.2fx   %s\n", name.c_str(), serial_ms, parallel_ms,
                serial_ms / parallel_ms, match ? "results match" : "MISMATCH");
}

WeightedGraph random_weighted(int n, std::mt19937_64& gen) {
    WeightedGraph r(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) r.set(i, j, rng::uniform01(gen));
    return r;
}

}  // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-34s %10s %12s %9s\n", "kernel", "serial ms", "parallel ms", "speedup");

    std::mt19937_64 gen(2024);

    {
        const WeightedGraph r = random_weighted(40, gen);
        const Graph f = builtin_graph("C4");
        double a = 0, b = 0;
        const double ts = time_ms([&] { a = serial::hom_density(f, r); });
        const double tp = time_ms([&] { b = hom_density(f, r); });
        row("hom_density C4 into n=40", ts, tp, std::abs(a - b) < 1e-12);
    }

    {
        const Graph g = generate_complete(8);
        const ForbiddenFamily fam({builtin_graph("K3")});
        BigInt a, b;
        const double ts = time_ms([&] { a = serial::count_forb(g, fam).count; });
        CountOptions opts;
        opts.split_depth = 6;
        const double tp = time_ms([&] { b = count_forb(g, fam, opts).count; });
        row("count_forb K8 / {K3}", ts, tp, a == b);
    }

    {
        std::mt19937_64 g2(7);
        const WeightedGraph r1 = random_weighted(18, g2), r2 = random_weighted(18, g2);
        double a = 0, b = 0;
        const double ts = time_ms([&] { a = serial::cut_distance_exact(r1, r2).value; });
        const double tp = time_ms([&] { b = cut_distance_exact(r1, r2).value; });
        row("cut_distance_exact n=18", ts, tp, std::abs(a - b) < 1e-10);
    }

    {
        const Graph g = generate_er(36, 0.5, 5);
        const ForbiddenFamily fam({builtin_graph("K3")});
        EstimatorConfig cfg;
        cfg.q = 9;
        cfg.trials = 15;
        cfg.seed = 1;
        EstimateReport a, b;
        const int saved = omp_get_max_threads();
        omp_set_num_threads(1);
        const double ts = time_ms([&] { a = estimate_z(g, fam, cfg); });
        omp_set_num_threads(saved);
        const double tp = time_ms([&] { b = estimate_z(g, fam, cfg); });
        row("estimate_z q=9 trials=15", ts, tp, a.per_trial == b.per_trial && a.median == b.median);
    }

    return 0;
}
