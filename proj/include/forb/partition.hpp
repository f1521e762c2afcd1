#pragma once

#include <functional>
#include <string>
#include <vector>

#include "forb/distance.hpp"
#include "forb/graph.hpp"

namespace forb {

/// Partition of [n] into k classes with sizes differing by at most 1.
/// Canonical form: each class sorted ascending, classes ordered by their
/// minimum element.
class Equipartition {
public:
    Equipartition() : n_(0) {}  // empty placeholder; every real instance is validated
    Equipartition(int n, std::vector<std::vector<int>> classes);

    /// k contiguous chunks of [n]; the first n mod k chunks get the extra vertex.
    static Equipartition initial(int n, int k);

    int n() const { return n_; }
    int k() const { return static_cast<int>(classes_.size()); }
    const std::vector<std::vector<int>>& classes() const { return classes_; }
    const std::vector<int>& class_of() const { return class_of_; }
    int class_size(int i) const { return static_cast<int>(classes_[i].size()); }

    /// Space-separated labels, one class per line; doubles as the canonical
    /// encoding used for deterministic tie-breaking.
    std::string encode() const;

    bool operator==(const Equipartition& o) const { return n_ == o.n_ && classes_ == o.classes_; }

private:
    int n_;
    std::vector<std::vector<int>> classes_;
    std::vector<int> class_of_;
};

/// Weighted graph of pairwise edge densities between partition classes,
/// along with the class sizes it was built from. Diagonal entry i equals
/// 2 * (internal edges of V_i) / |V_i|^2.
struct ClusterGraph {
    WeightedGraph weights;
    std::vector<int> class_sizes;
};

ClusterGraph quotient(const Graph& g, const Equipartition& p);

/// Block-average quotient of a weighted graph (used for fixed-point checks).
ClusterGraph quotient_weighted(const WeightedGraph& w, const Equipartition& p);

/// n x n weighted graph constant on blocks: value of (u, v) is the cluster
/// density of their classes (diagonal included).
WeightedGraph blowup(const Graph& g, const Equipartition& p);

inline constexpr int kEquipartitionEnumCap = 12;

/// Visits every unordered equipartition of [n] into exactly k classes once,
/// in canonical order. Refuses n beyond `cap`.
void for_each_equipartition(int n, int k, const std::function<void(const Equipartition&)>& visit,
                            int cap = kEquipartitionEnumCap);

std::vector<Equipartition> enumerate_equipartitions(int n, int k, int cap = kEquipartitionEnumCap);

struct FkCheck {
    bool regular = false;
    double dcut = 0.0;
    std::vector<int> witness_s, witness_t;  // violating pair when not regular
};

/// Exact gamma-FK-regularity check: dcut(g, blowup(g, p)) <= gamma.
/// Requires g.n() <= kCutExactMaxN.
FkCheck is_fk_regular(const Graph& g, const Equipartition& p, double gamma);

struct FkOptions {
    int max_iterations = 0;  // 0: use ceil(1/gamma^2)
};

struct FkResult {
    Equipartition partition;
    bool certified = false;   // exact dcut <= gamma established
    double achieved = 0.0;    // exact dcut if certified/exact mode, else best-found violation
    int iterations = 0;
    bool cap_exceeded = false;
};

/// Iterative refinement: find a violating cut (exact for n <= kCutExactMaxN,
/// spectral heuristic otherwise), split every class by S and T, re-equalize,
/// repeat until the violation drops to gamma or the iteration cap is hit.
FkResult find_fk_partition(const Graph& g, double gamma, int k0, const FkOptions& opts = {});

}  // namespace forb
