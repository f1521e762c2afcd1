#include "forb/estimator.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>

#include <omp.h>

#include "forb/rand.hpp"

namespace forb {

std::string to_string(EstimateMode mode) {
    return mode == EstimateMode::exact_count ? "exact-count" : "cluster-max";
}

void EstimatorConfig::validate() const {
    if (q < 2) throw std::invalid_argument("EstimatorConfig: q must be at least 2");
    if (trials < 1 || trials % 2 == 0) throw std::invalid_argument("EstimatorConfig: trials must be odd");
    if (K < 1) throw std::invalid_argument("EstimatorConfig: K must be at least 1");
}

Graph sample_induced(const Graph& g, int q, std::uint64_t seed) {
    if (q < 0 || q > g.n()) throw std::invalid_argument("sample_induced: q out of range");
    std::mt19937_64 gen(seed);
    std::vector<int> ids(g.n());
    std::iota(ids.begin(), ids.end(), 0);
    for (int i = 0; i < q; ++i) {
        const int j = i + static_cast<int>(rng::uniform_below(gen, static_cast<std::uint64_t>(g.n() - i)));
        std::swap(ids[i], ids[j]);
    }
    std::vector<int> chosen(ids.begin(), ids.begin() + q);
    std::sort(chosen.begin(), chosen.end());
    Graph out(q);
    for (int a = 0; a < q; ++a)
        for (int b = a + 1; b < q; ++b)
            if (g.has_edge(chosen[a], chosen[b])) out.add_edge(a, b);
    return out;
}

namespace {

MaxExResult max_ex_exact(const Graph& g, int K, const ForbiddenFamily& fam) {
    MaxExResult best;
    best.value = -1.0;
    for (int k = 1; k <= std::min(K, g.n()); ++k) {
        const std::vector<Equipartition> parts = enumerate_equipartitions(g.n(), k);
        std::vector<double> vals(parts.size());
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(parts.size()); ++i)
            vals[i] = ex_value(quotient(g, parts[i]).weights, fam).ex;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (vals[i] > best.value ||
                (vals[i] == best.value && parts[i].encode() < best.argmax.encode())) {
                best.value = vals[i];
                best.argmax = parts[i];
            }
        }
    }
    best.exact = true;
    return best;
}

MaxExResult max_ex_hillclimb(const Graph& g, int K, const ForbiddenFamily& fam, std::uint64_t seed) {
    MaxExResult best;
    best.value = -1.0;
    std::mt19937_64 gen(seed);
    const int restarts = 8;
    for (int k = 1; k <= std::min(K, g.n()); ++k) {
        for (int restart = 0; restart < restarts; ++restart) {
            std::vector<int> labels(g.n());
            std::iota(labels.begin(), labels.end(), 0);
            for (std::size_t s = labels.size(); s > 1; --s)
                std::swap(labels[s - 1], labels[rng::uniform_below(gen, s)]);
            std::vector<std::vector<int>> classes(k);
            for (int i = 0; i < g.n(); ++i) classes[i % k].push_back(labels[i]);
            Equipartition p(g.n(), std::move(classes));
            double val = ex_value(quotient(g, p).weights, fam).ex;

            bool improved = true;
            int steps = 0;
            while (improved && steps < 200) {
                improved = false;
                ++steps;
                // single-vertex swaps across classes preserve the equipartition
                auto cls = p.classes();
                for (int a = 0; a < p.k() && !improved; ++a) {
                    for (int b = a + 1; b < p.k() && !improved; ++b) {
                        for (std::size_t ia = 0; ia < cls[a].size() && !improved; ++ia) {
                            for (std::size_t ib = 0; ib < cls[b].size() && !improved; ++ib) {
                                auto trial = cls;
                                std::swap(trial[a][ia], trial[b][ib]);
                                Equipartition cand(g.n(), trial);
                                const double cand_val = ex_value(quotient(g, cand).weights, fam).ex;
                                if (cand_val > val) {
                                    val = cand_val;
                                    p = std::move(cand);
                                    cls = p.classes();
                                    improved = true;
                                }
                            }
                        }
                    }
                }
            }
            if (val > best.value || (val == best.value && p.encode() < best.argmax.encode())) {
                best.value = val;
                best.argmax = p;
            }
        }
    }
    best.exact = false;
    return best;
}

}  // namespace

MaxExResult max_ex_over_partitions(const Graph& g, int K, const ForbiddenFamily& fam, std::uint64_t seed) {
    if (g.n() == 0) throw std::invalid_argument("max_ex_over_partitions: empty graph");
    if (g.n() <= kMaxExExactMaxN) return max_ex_exact(g, K, fam);
    return max_ex_hillclimb(g, K, fam, seed);
}

EstimateReport estimate_z(const Graph& g, const ForbiddenFamily& fam, const EstimatorConfig& cfg) {
    cfg.validate();
    if (cfg.q > g.n()) throw std::invalid_argument("estimate_z: sample size exceeds graph size");
    const auto t0 = std::chrono::steady_clock::now();

    EstimateReport rep;
    rep.config = cfg;
    rep.per_trial.assign(cfg.trials, 0.0);
    rep.per_trial_elapsed_ms.assign(cfg.trials, 0.0);

    // Trials whose samples coincide as labeled graphs get one computation;
    // z is a pure function of the sample, so the report is unchanged.
    std::vector<Graph> samples;
    samples.reserve(cfg.trials);
    std::vector<int> group_of(cfg.trials);
    std::vector<int> representative;
    for (int t = 0; t < cfg.trials; ++t) {
        Graph s = sample_induced(g, cfg.q, cfg.seed ^ static_cast<std::uint64_t>(t));
        int grp = -1;
        for (int r = 0; r < static_cast<int>(representative.size()); ++r) {
            if (samples[representative[r]] == s) {
                grp = r;
                break;
            }
        }
        if (grp == -1) {
            grp = static_cast<int>(representative.size());
            representative.push_back(t);
        }
        group_of[t] = grp;
        samples.push_back(std::move(s));
    }

    std::vector<double> group_value(representative.size(), 0.0);
    std::vector<double> group_elapsed(representative.size(), 0.0);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t r = 0; r < static_cast<std::int64_t>(representative.size()); ++r) {
        const auto tt0 = std::chrono::steady_clock::now();
        const Graph& sample = samples[representative[r]];
        if (cfg.mode == EstimateMode::exact_count) {
            group_value[r] = count_forb(sample, fam, cfg.count).z;
        } else {
            group_value[r] = max_ex_over_partitions(sample, cfg.K, fam).value;
        }
        group_elapsed[r] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - tt0).count();
    }
    for (int t = 0; t < cfg.trials; ++t) {
        rep.per_trial[t] = group_value[group_of[t]];
        rep.per_trial_elapsed_ms[t] = representative[group_of[t]] == t ? group_elapsed[group_of[t]] : 0.0;
    }

    std::vector<double> sorted = rep.per_trial;
    std::sort(sorted.begin(), sorted.end());
    const int t = cfg.trials;
    rep.median = sorted[t / 2];
    rep.iqr = sorted[(3 * (t - 1)) / 4] - sorted[(t - 1) / 4];
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

Theorem41Gap theorem41_gap(const Graph& g, const ForbiddenFamily& fam, int K) {
    Theorem41Gap out;
    out.z_exact = z_value(g, fam);
    out.max_ex = max_ex_over_partitions(g, K, fam).value;
    out.gap = out.z_exact - out.max_ex;
    return out;
}

double estimate_distance(const Graph& g, const ForbiddenFamily& fam, const EstimatorConfig& cfg) {
    const double edge_density = 2.0 * static_cast<double>(g.edge_count()) /
                                (static_cast<double>(g.n()) * g.n());
    return edge_density - 2.0 * estimate_z(g, fam, cfg).median;
}

namespace {

double matched_l1(const WeightedGraph& a, const WeightedGraph& b) {
    const int k = a.n();
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    do {
        double s = 0.0;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) s += std::abs(a.get(i, j) - b.get(perm[i], perm[j]));
        best = std::min(best, s / (static_cast<double>(k) * k));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<std::vector<WeightedGraph>> cluster_graphs_by_k(const Graph& g, int K) {
    std::vector<std::vector<WeightedGraph>> by_k(K + 1);
    for (int k = 1; k <= std::min(K, g.n()); ++k)
        for_each_equipartition(g.n(), k,
                               [&](const Equipartition& p) { by_k[k].push_back(quotient(g, p).weights); });
    return by_k;
}

double one_sided_deviation(const std::vector<std::vector<WeightedGraph>>& from,
                           const std::vector<std::vector<WeightedGraph>>& to) {
    double dev = 0.0;
    for (std::size_t k = 1; k < from.size(); ++k) {
        for (const WeightedGraph& a : from[k]) {
            double closest = std::numeric_limits<double>::infinity();
            if (k < to.size())
                for (const WeightedGraph& b : to[k]) closest = std::min(closest, matched_l1(a, b));
            dev = std::max(dev, closest);
        }
    }
    return dev;
}

}  // namespace

SimilarityReport sample_cluster_similarity_experiment(const Graph& g, int q, int K, int trials,
                                                      std::uint64_t seed) {
    if (g.n() > 12 || q > 10) throw std::invalid_argument("similarity experiment: enumeration caps exceeded");
    if (q > g.n()) throw std::invalid_argument("similarity experiment: q exceeds graph size");
    const auto full = cluster_graphs_by_k(g, K);

    SimilarityReport rep;
    rep.per_trial.assign(trials, {});
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < trials; ++t) {
        const Graph sample = sample_induced(g, q, seed ^ static_cast<std::uint64_t>(t));
        const auto sampled = cluster_graphs_by_k(sample, K);
        rep.per_trial[t].full_to_sample = one_sided_deviation(full, sampled);
        rep.per_trial[t].sample_to_full = one_sided_deviation(sampled, full);
    }
    for (const SimilarityTrial& tr : rep.per_trial) {
        rep.max_full_to_sample = std::max(rep.max_full_to_sample, tr.full_to_sample);
        rep.max_sample_to_full = std::max(rep.max_sample_to_full, tr.sample_to_full);
    }
    return rep;
}

}  // namespace forb
