#pragma once

#include <optional>
#include <vector>

#include "forb/graph.hpp"

namespace forb {

inline constexpr int kHomImageMaxN = 8;

/// Quotient of a graph by a partition into independent sets, with the
/// surjection that produced it. No edge is collapsed, so the image is
/// loop-free.
struct HomImage {
    Graph image;
    std::vector<int> quotient_map;  // V(f) -> V(image)
};

/// All homomorphic images of f (f itself included), deduplicated up to
/// isomorphism by exhaustive canonical labeling. Refuses |V(f)| > 8.
std::vector<HomImage> homomorphic_images(const Graph& f);

struct BlowupCheck {
    bool holds = false;
    double t_f = 0.0;     // t(f, h)
    double t_fhat = 0.0;  // t(fhat, h)
    double exponent = 0.0;  // ell = (|V(f)|+1)^{|V(fhat)|}
};

/// Verifies t(f, h) >= t(fhat, h)^ell for a surjective homomorphism
/// zeta : V(f) -> V(fhat). Throws if zeta is not one.
BlowupCheck blowup_inequality_check(const Graph& fhat, const Graph& f, const std::vector<int>& zeta,
                                    const Graph& h);

struct ThresholdResult {
    Graph graph;
    double dropped_loop_mass = 0.0;  // diagonal weight at or above the threshold, discarded
};

/// Loop-free 0/1 graph keeping pairs with weight >= theta.
ThresholdResult threshold_graph(const WeightedGraph& r, double theta);

struct RemovalWitness {
    std::size_t member_index = 0;
    double density = 0.0;  // t(member, r) > 0
};

/// Scans the family by ascending vertex count (then edge count, then index)
/// and returns the first member with positive homomorphism density in r.
std::optional<RemovalWitness> removal_witness(const WeightedGraph& r, const ForbiddenFamily& fam);

}  // namespace forb
