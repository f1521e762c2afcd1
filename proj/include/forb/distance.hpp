#pragma once

#include <vector>

#include "forb/graph.hpp"

namespace forb {

/// Normalized edit distance (2/n^2) * |E(g1) symmetric-difference E(g2)|.
double edit_distance(const Graph& g1, const Graph& g2);

/// Normalized L1 distance (1/n^2) * sum over ordered pairs (diagonal included).
double l1_distance(const WeightedGraph& r1, const WeightedGraph& r2);

inline constexpr int kCutExactMaxN = 22;

struct CutResult {
    double value = 0.0;            // (1/n^2) max_{S,T} |e_{r1}(S,T) - e_{r2}(S,T)|
    std::vector<int> s, t;         // a maximizing pair (exact) or best found (heuristic)
    bool exact = false;
};

/// Exact cut distance by enumerating S with the optimal T chosen per S.
/// Cost 2^n * O(n); refuses n > kCutExactMaxN.
CutResult cut_distance_exact(const WeightedGraph& r1, const WeightedGraph& r2);

struct CutBound {
    double lower = 0.0;            // certified by the witness pair (s, t)
    double upper = 0.0;            // l1_distance, always an upper bound
    std::vector<int> s, t;
};

/// Any-size heuristic: power iteration on the deviation matrix, sign
/// rounding, one local-swap pass. The lower bound is certified by the
/// returned (S, T); the upper bound is the L1 distance.
CutBound cut_distance_heuristic(const WeightedGraph& r1, const WeightedGraph& r2);

namespace serial {
/// Reference implementation: per-S optimal-T scan with column sums
/// recomputed from scratch (no Gray-code increments, no OpenMP).
CutResult cut_distance_exact(const WeightedGraph& r1, const WeightedGraph& r2);
}  // namespace serial

}  // namespace forb
