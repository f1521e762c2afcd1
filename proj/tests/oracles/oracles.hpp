#pragma once

// Independent reference implementations used only by tests and the `verify`
// subcommand. Everything here is deliberately naive: plain enumeration, no
// pruning shared with the library.

#include <cstdint>
#include <vector>

#include "forb/graph.hpp"

namespace forb::oracle {

/// Copies of f in g as edge-index masks over g.edges() order (m <= 64).
std::vector<std::uint64_t> copy_masks(const Graph& g, const Graph& f);

/// True iff g contains a subgraph isomorphic to f (no edge-count cap).
bool has_copy(const Graph& g, const Graph& f);

/// Full 2^m enumeration count of fam-free spanning subgraphs (m <= 26).
std::uint64_t naive_count_forb(const Graph& g, const ForbiddenFamily& fam);

/// Exhaustive max over S and T (n <= 8): (1/n^2) max |e_1(S,T) - e_2(S,T)|.
double brute_cut_distance(const WeightedGraph& r1, const WeightedGraph& r2);

/// Per-S scan with the optimal T per sign, column sums recomputed from
/// scratch (n <= 16).
double scan_cut_distance(const WeightedGraph& r1, const WeightedGraph& r2);

/// Full odometer homomorphism density (no pruning).
double naive_hom_density(const Graph& f, const WeightedGraph& r);

/// True iff f maps homomorphically into the positive support of r.
bool naive_hom_exists(const Graph& f, const WeightedGraph& r);

struct BruteExResult {
    double ex = 0.0;    // max e(S)/k^2 over hom-free supports
    double dist = 0.0;  // (total ordered mass - best kept ordered mass) / k^2
};

/// Enumerates all 2^(k(k+1)/2) supports (k <= 5).
BruteExResult brute_ex_support(const WeightedGraph& r, const ForbiddenFamily& fam);

/// Full colors^k coloring enumeration of the monochromatic mass minimum.
double brute_colorability_distance(const WeightedGraph& r, int colors);

/// Edit distance from h to fam-freeness: (2/n^2) * minimum edge deletions
/// killing every copy (m <= 22).
double brute_dist_to_forb(const Graph& h, const std::vector<Graph>& fam_members);

/// Number of equipartitions of [n] into exactly k classes, by the
/// multinomial formula.
double equipartition_count_formula(int n, int k);

}  // namespace forb::oracle
