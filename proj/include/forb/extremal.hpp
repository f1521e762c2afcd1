#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "forb/graph.hpp"
#include "forb/partition.hpp"

namespace forb {

inline constexpr int kExExactMaxN = 12;

/// Positive support kept by an optimal subgraph selection. `kept` lists
/// unordered pairs (i <= j; i == j is a loop); `ordered_weight` is the sum of
/// kept weights over ordered pairs, so e(S) = ordered_weight / 2.
struct SupportSelection {
    std::vector<std::pair<int, int>> kept;
    double ordered_weight = 0.0;
};

struct ExResult {
    double ex = 0.0;  // e(S) / k^2 for the best hom-free spanning subgraph S <= r
    SupportSelection support;
    bool exact = true;
};

struct ExOptions {
    int exact_cap = kExExactMaxN;
    std::uint64_t seed = 1;  // for the inexact fallback above the cap
};

/// ex(r, fam): maximum of e(S)/k^2 over S <= r with t(F,S) = 0 for every
/// member F. An optimal S keeps full weight on a hom-free support and zero
/// elsewhere, so this is max-weight hom-free support selection, solved by
/// branch and bound over pairs in descending weight order ("keep" explored
/// first, ties broken lexicographically). Above the cap a greedy plus
/// local-search fallback runs and the result is flagged inexact.
ExResult ex_value(const WeightedGraph& r, const ForbiddenFamily& fam, const ExOptions& opts = {});

/// L1 distance from r to Forb*_hom(fam) on the same vertex set, via the
/// duality dist = 2 (e(r)/k^2 - ex(r, fam)).
double dist_forbhom(const WeightedGraph& r, const ForbiddenFamily& fam, const ExOptions& opts = {});

/// dist_forbhom(quotient(g, p), fam) <= eps. The caller is responsible for
/// g being fam-free.
bool is_recovering(const Graph& g, const Equipartition& p, const ForbiddenFamily& fam, double eps,
                   const ExOptions& opts = {});

struct RecoverOptions {
    int max_retries = 6;
    ExOptions ex;
    FkOptions fk;
};

struct RecoverResult {
    bool found = false;
    Equipartition partition;
    double achieved_dist = 0.0;  // best dist seen (the returned partition's when found)
    double gamma_used = 0.0;
    int retries = 0;
};

/// Runs find_fk_partition(g, gamma, k0) and verifies is_recovering at eps;
/// on failure retries with halved gamma and doubled k0. The verifier is
/// ground truth; gamma and k0 are tuning inputs.
RecoverResult find_recovering_partition(const Graph& g, const ForbiddenFamily& fam, double eps, double gamma,
                                        int k0, const RecoverOptions& opts = {});

inline constexpr int kColorExactMaxN = 12;

struct ColorabilityResult {
    double distance = 0.0;  // min over colorings of monochromatic ordered mass / k^2
    std::vector<int> coloring;
    bool exact = true;
};

/// L1 distance from r to the hom-free class of r-colorability: minimum over
/// colorings c:[k] -> [colors] of the normalized weight on monochromatic
/// ordered pairs (loops included). Exact for k <= kColorExactMaxN, seeded
/// local search above.
ColorabilityResult colorability_distance(const WeightedGraph& r, int colors, std::uint64_t seed = 1);

/// Builds the ceil(colors/eps)-class partition with color-pure classes plus
/// leftover mixed classes, and asserts the quotient's colorability distance
/// is at most eps before returning.
Equipartition colorable_recovering_partition(const Graph& g, const std::vector<int>& coloring, int colors,
                                             double eps);

}  // namespace forb
