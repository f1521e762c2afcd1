#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "forb/graph.hpp"

namespace forb {

using BigInt = boost::multiprecision::cpp_int;

struct CountOptions {
    std::uint64_t node_budget = 1'000'000'000;
    int split_depth = 2;  // DFS depth at which subtrees become parallel tasks
};

class BudgetExceededError : public std::runtime_error {
public:
    explicit BudgetExceededError(std::uint64_t nodes)
        : std::runtime_error("count_forb: node budget exceeded after " + std::to_string(nodes) +
                             " search nodes"),
          nodes_explored(nodes) {}
    std::uint64_t nodes_explored;
};

struct CountResult {
    BigInt count;
    double z = 0.0;  // log2(count) / n^2
    int n = 0;
    std::uint64_t nodes = 0;
    double elapsed_ms = 0.0;
};

/// Exact number of spanning subgraphs of g containing no copy of any family
/// member. DFS over edges (heaviest-conflict edges first) with bitset masks;
/// a branch is cut the moment an included edge completes a forbidden copy,
/// and a subtree collapses to 2^(free edges) once every copy is dead.
CountResult count_forb(const Graph& g, const ForbiddenFamily& fam, const CountOptions& opts = {});

double z_value(const Graph& g, const ForbiddenFamily& fam, const CountOptions& opts = {});

/// H(x) = -x log2 x - (1-x) log2 (1-x) on (0,1).
double binary_entropy(double x);

/// Checks sum_{i<=k} C(n,i) <= 2^{H(k/n) n} with an exact big-integer left
/// side. Requires 1 <= k and k/n < 1/2.
bool entropy_binomial_bound_check(int n, int k);

BigInt binomial(int n, int k);

/// log2 of a positive big integer, exact for powers of two, otherwise
/// accurate to the top 53 bits.
double log2_bigint(const BigInt& v);

/// All distinct copies of f in g as sorted lists of edge ids (indices into
/// g.edges() order).
std::vector<std::vector<int>> subgraph_copy_edge_sets(const Graph& g, const Graph& f);

namespace serial {
CountResult count_forb(const Graph& g, const ForbiddenFamily& fam, const CountOptions& opts = {});
}

}  // namespace forb
