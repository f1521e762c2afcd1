#include "forb/removal.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "forb/homomorphism.hpp"

namespace forb {

namespace {

// Upper-triangle adjacency bits under a vertex permutation; the minimum over
// all permutations is the canonical form (fine at <= 8 vertices).
std::uint64_t adjacency_code(const Graph& g, const std::vector<int>& perm) {
    std::uint64_t code = 0;
    int bit = 0;
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j, ++bit)
            if (g.has_edge(perm[i], perm[j])) code |= std::uint64_t{1} << bit;
    return code;
}

std::pair<std::uint64_t, std::vector<int>> canonical_form(const Graph& g) {
    std::vector<int> perm(g.n());
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best_code = adjacency_code(g, perm);
    std::vector<int> best_perm = perm;
    while (std::next_permutation(perm.begin(), perm.end())) {
        const std::uint64_t code = adjacency_code(g, perm);
        if (code < best_code) {
            best_code = code;
            best_perm = perm;
        }
    }
    return {best_code, best_perm};
}

Graph apply_positions(const Graph& g, const std::vector<int>& perm) {
    // perm[i] is the original vertex placed at position i
    std::vector<int> pos(g.n());
    for (int i = 0; i < g.n(); ++i) pos[perm[i]] = i;
    Graph out(g.n());
    for (auto [u, v] : g.edges()) out.add_edge(pos[u], pos[v]);
    return out;
}

}  // namespace

std::vector<HomImage> homomorphic_images(const Graph& f) {
    if (f.n() > kHomImageMaxN) throw std::invalid_argument("homomorphic_images: more than 8 vertices");
    if (f.n() == 0) return {};

    std::map<std::pair<int, std::uint64_t>, HomImage> seen;  // (class count, canonical code)

    // Restricted-growth enumeration of set partitions; a class stays legal
    // only while it is independent in f.
    std::vector<int> assign(f.n(), -1);
    auto rec = [&](auto&& self, int v, int classes) -> void {
        if (v == f.n()) {
            Graph image(classes);
            for (auto [a, b] : f.edges()) {
                if (!image.has_edge(assign[a], assign[b])) image.add_edge(assign[a], assign[b]);
            }
            auto [code, perm] = canonical_form(image);
            const auto key = std::make_pair(classes, code);
            if (seen.count(key)) return;
            std::vector<int> pos(classes);
            for (int i = 0; i < classes; ++i) pos[perm[i]] = i;
            HomImage hi;
            hi.image = apply_positions(image, perm);
            hi.quotient_map.resize(f.n());
            for (int u = 0; u < f.n(); ++u) hi.quotient_map[u] = pos[assign[u]];
            seen.emplace(key, std::move(hi));
            return;
        }
        for (int c = 0; c <= classes && c < f.n(); ++c) {
            bool independent = true;
            for (int u = 0; u < v; ++u)
                if (assign[u] == c && f.has_edge(u, v)) {
                    independent = false;
                    break;
                }
            if (!independent) continue;
            assign[v] = c;
            self(self, v + 1, std::max(classes, c + 1));
            assign[v] = -1;
        }
    };
    rec(rec, 0, 0);

    std::vector<HomImage> out;
    out.reserve(seen.size());
    for (auto& [key, hi] : seen) out.push_back(std::move(hi));
    return out;
}

BlowupCheck blowup_inequality_check(const Graph& fhat, const Graph& f, const std::vector<int>& zeta,
                                    const Graph& h) {
    if (static_cast<int>(zeta.size()) != f.n())
        throw std::invalid_argument("blowup_inequality_check: zeta size mismatch");
    std::vector<char> hit(fhat.n(), 0);
    for (int v = 0; v < f.n(); ++v) {
        if (zeta[v] < 0 || zeta[v] >= fhat.n())
            throw std::invalid_argument("blowup_inequality_check: zeta image out of range");
        hit[zeta[v]] = 1;
    }
    for (char c : hit)
        if (!c) throw std::invalid_argument("blowup_inequality_check: zeta not surjective");
    for (auto [u, v] : f.edges()) {
        if (zeta[u] == zeta[v] || !fhat.has_edge(zeta[u], zeta[v]))
            throw std::invalid_argument("blowup_inequality_check: zeta not a homomorphism");
    }

    const WeightedGraph hw = WeightedGraph::from_graph(h);
    BlowupCheck out;
    out.t_f = hom_density(f, hw);
    out.t_fhat = hom_density(fhat, hw);
    out.exponent = std::pow(static_cast<double>(f.n()) + 1.0, static_cast<double>(fhat.n()));
    // delta_hat^ell may underflow to zero for large ell; the comparison is
    // still sound since both sides are nonnegative.
    const double bound = std::pow(out.t_fhat, out.exponent);
    out.holds = out.t_f >= bound;
    return out;
}

ThresholdResult threshold_graph(const WeightedGraph& r, double theta) {
    if (!(theta > 0.0 && theta <= 1.0)) throw std::invalid_argument("threshold_graph: theta outside (0,1]");
    ThresholdResult out{Graph(r.n()), 0.0};
    for (int i = 0; i < r.n(); ++i) {
        if (r.get(i, i) >= theta) out.dropped_loop_mass += r.get(i, i);
        for (int j = i + 1; j < r.n(); ++j)
            if (r.get(i, j) >= theta) out.graph.add_edge(i, j);
    }
    return out;
}

std::optional<RemovalWitness> removal_witness(const WeightedGraph& r, const ForbiddenFamily& fam) {
    std::vector<std::size_t> order(fam.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (fam[a].n() != fam[b].n()) return fam[a].n() < fam[b].n();
        return fam[a].edge_count() < fam[b].edge_count();
    });
    for (std::size_t idx : order) {
        const double t = hom_density(fam[idx], r);
        if (t > 0.0) return RemovalWitness{idx, t};
    }
    return std::nullopt;
}

}  // namespace forb
