#include <cmath>

#include "doctest.h"
#include "forb/estimator.hpp"
#include "forb/generate.hpp"

using namespace forb;

namespace {
const ForbiddenFamily kK3({builtin_graph("K3")});
}

TEST_CASE("config validation") {
    EstimatorConfig cfg;
    cfg.q = 1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.q = 4;
    cfg.trials = 10;  // even
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.trials = 11;
    cfg.K = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("sample_induced") {
    const Graph g = generate_turan(2, 10);
    CHECK(sample_induced(g, g.n(), 99) == g);  // full sample preserves order
    CHECK(sample_induced(g, 1, 7).n() == 1);
    CHECK(sample_induced(g, 1, 7).edge_count() == 0);
    CHECK(sample_induced(g, 6, 123) == sample_induced(g, 6, 123));
    CHECK_THROWS_AS(sample_induced(g, 11, 1), std::invalid_argument);
}

TEST_CASE("max_ex_over_partitions exact mode") {
    // K_{2,2}: quarter at the sides partition
    const MaxExResult bi = max_ex_over_partitions(generate_complete_bipartite(2, 2), 2, kK3);
    CHECK(bi.exact);
    CHECK(bi.value == 0.25);
    CHECK(bi.argmax == Equipartition(4, {{0, 1}, {2, 3}}));

    CHECK(max_ex_over_partitions(Graph(6), 3, kK3).value == 0.0);

    // K6 at K=2: the full enumeration over all ten 3+3 equipartitions (plus k=1)
    const MaxExResult k6 = max_ex_over_partitions(generate_complete(6), 2, kK3);
    double oracle_best = 0.0;
    for (int k = 1; k <= 2; ++k)
        for (const auto& p : enumerate_equipartitions(6, k))
            oracle_best = std::max(oracle_best, ex_value(quotient(generate_complete(6), p).weights, kK3).ex);
    CHECK(k6.value == doctest::Approx(oracle_best).epsilon(1e-14));
    CHECK(k6.value == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("max_ex hill-climb mode is labeled inexact and bounded by exact z") {
    const Graph g = generate_turan(2, 16);
    const MaxExResult hc = max_ex_over_partitions(g, 2, kK3, 5);
    CHECK_FALSE(hc.exact);
    CHECK(hc.value <= 0.25 + 1e-12);  // z(T2(16)) = 1/4 bounds every ex by Theorem 4.1's lower direction
    CHECK(hc.value > 0.0);
}

TEST_CASE("estimate_z on the edgeless graph") {
    EstimatorConfig cfg;
    cfg.q = 4;
    cfg.trials = 9;
    cfg.seed = 5;
    const EstimateReport rep = estimate_z(Graph(20), kK3, cfg);
    for (double v : rep.per_trial) CHECK(v == 0.0);
    CHECK(rep.median == 0.0);
    CHECK(rep.iqr == 0.0);
}

TEST_CASE("estimate_z concentrates on the Turan ground truth") {
    EstimatorConfig cfg;
    cfg.q = 10;
    cfg.trials = 99;
    cfg.seed = 1;
    const EstimateReport rep = estimate_z(generate_turan(2, 40), kK3, cfg);
    CHECK(std::abs(rep.median - 0.25) <= 0.05);
    // vertex-transitive ground truth: every trial is a*b/100 for a+b=10
    for (double v : rep.per_trial) {
        CHECK(v >= 0.09 - 1e-12);
        CHECK(v <= 0.25 + 1e-12);
    }
}

TEST_CASE("estimate_z in exact mode matches identical samples") {
    // samples of a complete graph are complete: every trial equals z(K5)
    EstimatorConfig cfg;
    cfg.q = 5;
    cfg.trials = 11;
    cfg.seed = 3;
    const EstimateReport rep = estimate_z(generate_complete(12), kK3, cfg);
    const double z5 = z_value(generate_complete(5), kK3);
    for (double v : rep.per_trial) CHECK(v == z5);
    CHECK(rep.median == z5);
}

TEST_CASE("estimate_z determinism") {
    EstimatorConfig cfg;
    cfg.q = 8;
    cfg.trials = 15;
    cfg.seed = 42;
    const Graph g = generate_er(30, 0.4, 9);
    const EstimateReport a = estimate_z(g, kK3, cfg);
    const EstimateReport b = estimate_z(g, kK3, cfg);
    CHECK(a.per_trial == b.per_trial);
    CHECK(a.median == b.median);
    CHECK(a.iqr == b.iqr);
}

TEST_CASE("cluster-max mode runs and lower-bounds exact z") {
    EstimatorConfig cfg;
    cfg.q = 6;
    cfg.trials = 5;
    cfg.seed = 2;
    cfg.K = 2;
    cfg.mode = EstimateMode::cluster_max;
    const Graph g = generate_turan(2, 20);
    const EstimateReport rep = estimate_z(g, kK3, cfg);
    CHECK(rep.median >= 0.0);
    CHECK(rep.median <= 0.25 + 1e-12);
}

TEST_CASE("theorem41_gap") {
    const Theorem41Gap turan = theorem41_gap(generate_turan(2, 8), kK3, 2);
    CHECK(turan.z_exact == 0.25);
    CHECK(turan.max_ex == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(turan.gap == doctest::Approx(0.0).epsilon(1e-14));

    const Theorem41Gap empty = theorem41_gap(Graph(6), kK3, 2);
    CHECK(empty.z_exact == 0.0);
    CHECK(empty.max_ex == 0.0);

    const Theorem41Gap k7 = theorem41_gap(generate_complete(7), kK3, 2);
    CHECK(k7.z_exact >= k7.max_ex - 2.0 / 7.0);
}

TEST_CASE("estimate_distance") {
    // triangle-free host: z is close to edge density, so the estimate is near 0
    EstimatorConfig cfg;
    cfg.q = 8;
    cfg.trials = 25;
    cfg.seed = 4;
    const Graph tf = generate_planted_free(20, 0.3, kK3, 17);
    CHECK(std::abs(estimate_distance(tf, kK3, cfg)) <= 0.1);

    // full sample of K9: the formula reduces to 2e/n^2 - 2 z(K9) exactly
    EstimatorConfig full;
    full.q = 9;
    full.trials = 3;
    full.seed = 1;
    const Graph k9 = generate_complete(9);
    const double est = estimate_distance(k9, kK3, full);
    const double z9 = z_value(k9, kK3);
    CHECK(est == doctest::Approx(2.0 * 36.0 / 81.0 - 2.0 * z9).epsilon(1e-14));

    CHECK(estimate_distance(Graph(12), kK3, cfg) == 0.0);
}

TEST_CASE("cluster similarity experiment") {
    // full sample: both deviations vanish
    const Graph g = generate_complete_bipartite(3, 3);
    const SimilarityReport same = sample_cluster_similarity_experiment(g, 6, 2, 5, 1);
    CHECK(same.max_full_to_sample == 0.0);
    CHECK(same.max_sample_to_full == 0.0);

    const SimilarityReport empty = sample_cluster_similarity_experiment(Graph(8), 5, 2, 5, 1);
    CHECK(empty.max_full_to_sample == 0.0);

    // K_{4,4} with q = 6: deviations are recorded and stay modest
    const SimilarityReport k44 =
        sample_cluster_similarity_experiment(generate_complete_bipartite(4, 4), 6, 2, 20, 7);
    CHECK(k44.per_trial.size() == 20);
    for (const auto& tr : k44.per_trial) {
        CHECK(tr.full_to_sample >= 0.0);
        CHECK(tr.sample_to_full >= 0.0);
    }

    CHECK_THROWS_AS(sample_cluster_similarity_experiment(generate_complete(13), 5, 2, 3, 1),
                    std::invalid_argument);
}
