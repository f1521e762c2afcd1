#pragma once

#include <vector>

#include "forb/graph.hpp"

namespace forb {

/// Homomorphism density t(f, r): average over all |V(r)|^|V(f)| vertex maps
/// of the product of edge weights along f's edges. Exact zero cases are
/// preserved: subtrees are pruned only when a partial product is exactly 0.
/// Map enumeration is split into one block per assignment of f's first
/// vertex; block sums are combined by fixed-order pairwise summation, so the
/// result is identical for any thread count.
double hom_density(const Graph& f, const WeightedGraph& r);

/// True iff some map of V(f) into [k] sends every edge of f to a positive
/// support entry. adj is a k*k symmetric 0/1 matrix (loops allowed).
bool hom_exists_in_support(const Graph& f, int k, const std::vector<char>& adj);

/// As above, but only maps that use the unordered support pair {a, b} for at
/// least one edge of f. Complete check for incremental support growth: any
/// new homomorphism created by adding {a, b} must use it.
bool hom_exists_in_support_using_pair(const Graph& f, int k, const std::vector<char>& adj, int a, int b);

/// True iff f admits a homomorphism into the positive support of `support`.
bool hom_exists(const Graph& f, const WeightedGraph& support);

namespace serial {
/// Reference: plain odometer enumeration of all maps, summed in index order.
double hom_density(const Graph& f, const WeightedGraph& r);
}

}  // namespace forb
