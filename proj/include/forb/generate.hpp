#pragma once

#include <cstdint>
#include <string>

#include "forb/graph.hpp"

namespace forb {

Graph generate_complete(int n);

/// Balanced complete r-partite graph on n vertices (classes are contiguous
/// label ranges).
Graph generate_turan(int r, int n);

Graph generate_complete_bipartite(int a, int b);

/// Erdos-Renyi G(n, p), one seeded coin per unordered pair.
Graph generate_er(int n, double p, std::uint64_t seed);

/// Random graph on k * class_size vertices with one coin per pair, biased by
/// the cluster weight of the endpoints' classes (loops never produced).
Graph generate_blowup_rounded(const WeightedGraph& cluster, int class_size, std::uint64_t seed);

/// G(n, p) conditioned on fam-freeness by repeated copy removal: while some
/// forbidden copy exists, delete a seeded-random edge of the first copy
/// found.
Graph generate_planted_free(int n, double p, const ForbiddenFamily& fam, std::uint64_t seed);

/// Builtin pattern by name: K2, K3, K4, K5, P3, P4, C4, C5.
Graph builtin_graph(const std::string& name);

bool is_builtin_graph(const std::string& name);

}  // namespace forb
