#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "forb/counting.hpp"
#include "forb/extremal.hpp"
#include "forb/graph.hpp"
#include "forb/partition.hpp"

namespace forb {

enum class EstimateMode { exact_count, cluster_max };

std::string to_string(EstimateMode mode);

struct EstimatorConfig {
    int q = 2;
    int trials = 1;           // must be odd so the median is an order statistic
    std::uint64_t seed = 0;
    int K = 1;                // cluster-max mode: max cluster size
    EstimateMode mode = EstimateMode::exact_count;
    double eps = 0.0;         // target accuracy, reporting only
    CountOptions count;       // exact-count mode budget

    void validate() const;
};

struct EstimateReport {
    std::vector<double> per_trial;            // indexed by trial number
    std::vector<double> per_trial_elapsed_ms;
    double median = 0.0;   // exact middle order statistic
    double iqr = 0.0;      // sorted[(3(T-1))/4] - sorted[(T-1)/4]
    EstimatorConfig config;
    double elapsed_ms = 0.0;
};

/// Uniform q-subset via a seeded Fisher-Yates prefix; vertices are relabeled
/// 0..q-1 preserving their original order.
Graph sample_induced(const Graph& g, int q, std::uint64_t seed);

inline constexpr int kMaxExExactMaxN = 12;

struct MaxExResult {
    double value = 0.0;
    Equipartition argmax;
    bool exact = true;
};

/// max over equipartitions into at most K classes of ex(quotient(g, .), fam).
/// Exact enumeration for g.n() <= kMaxExExactMaxN; seeded hill climbing with
/// single-vertex swaps above, flagged inexact. Ties are broken by the
/// canonical partition encoding.
MaxExResult max_ex_over_partitions(const Graph& g, int K, const ForbiddenFamily& fam,
                                   std::uint64_t seed = 1);

/// Per trial t: sample with seed xor t, evaluate z on the sample (exact
/// count, or the cluster-graph maximum), report the median and IQR. Trials
/// run in parallel into a slot array indexed by trial, so the report is
/// identical for any thread count.
EstimateReport estimate_z(const Graph& g, const ForbiddenFamily& fam, const EstimatorConfig& cfg);

struct Theorem41Gap {
    double z_exact = 0.0;
    double max_ex = 0.0;
    double gap = 0.0;  // z_exact - max_ex; always >= -K/n
};

Theorem41Gap theorem41_gap(const Graph& g, const ForbiddenFamily& fam, int K);

/// 2 e(g)/n^2 - 2 * (median estimate of z). Experimental: reported accuracy
/// only.
double estimate_distance(const Graph& g, const ForbiddenFamily& fam, const EstimatorConfig& cfg);

struct SimilarityTrial {
    double full_to_sample = 0.0;  // max over full-graph cluster graphs of min matched distance
    double sample_to_full = 0.0;
};

struct SimilarityReport {
    std::vector<SimilarityTrial> per_trial;
    double max_full_to_sample = 0.0;
    double max_sample_to_full = 0.0;
};

/// Compares the cluster-graph sets of g and of q-samples under minimum-L1
/// label matching, one pair of one-sided deviations per trial. Enumeration
/// caps: g.n() <= 12 and q <= 10.
SimilarityReport sample_cluster_similarity_experiment(const Graph& g, int q, int K, int trials,
                                                      std::uint64_t seed);

}  // namespace forb
