#include "forb/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "forb/homomorphism.hpp"
#include "forb/rand.hpp"

namespace forb {

namespace {

struct Item {
    int i, j;       // unordered pair, i <= j
    double weight;  // contribution to e(S): r(i,j) off-diagonal, r(i,i)/2 for loops
};

std::vector<Item> positive_items(const WeightedGraph& r) {
    std::vector<Item> items;
    for (int i = 0; i < r.n(); ++i)
        for (int j = i; j < r.n(); ++j) {
            const double w = r.get(i, j);
            if (w > 0.0) items.push_back({i, j, i == j ? w / 2.0 : w});
        }
    std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        if (a.weight != b.weight) return a.weight > b.weight;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });
    return items;
}

// adj must already contain the pair (a, b); the current support minus that
// pair must be hom-free, which the BnB and the greedy both maintain.
bool pair_creates_hom(const ForbiddenFamily& fam, int k, const std::vector<char>& adj, int a, int b) {
    for (const Graph& f : fam.members())
        if (hom_exists_in_support_using_pair(f, k, adj, a, b)) return true;
    return false;
}

struct SupportEdit {
    std::vector<char>& adj;
    int k, a, b;
    SupportEdit(std::vector<char>& adj_, int k_, int a_, int b_) : adj(adj_), k(k_), a(a_), b(b_) {
        adj[static_cast<std::size_t>(a) * k + b] = 1;
        adj[static_cast<std::size_t>(b) * k + a] = 1;
    }
    void revert() {
        adj[static_cast<std::size_t>(a) * k + b] = 0;
        adj[static_cast<std::size_t>(b) * k + a] = 0;
    }
};

struct BnB {
    const std::vector<Item>& items;
    const ForbiddenFamily& fam;
    int k;
    std::vector<double> suffix;  // total weight of items idx..end
    std::vector<char> adj;
    std::vector<char> keep;
    double best_value = 0.0;
    std::vector<char> best_keep;

    BnB(const std::vector<Item>& items_, const ForbiddenFamily& fam_, int k_)
        : items(items_), fam(fam_), k(k_) {
        suffix.assign(items.size() + 1, 0.0);
        for (int i = static_cast<int>(items.size()) - 1; i >= 0; --i)
            suffix[i] = suffix[i + 1] + items[i].weight;
        adj.assign(static_cast<std::size_t>(k) * k, 0);
        keep.assign(items.size(), 0);
        best_keep = keep;
    }

    // The incumbent only improves on strictly larger values, and "keep" is
    // explored first, so the reported argmax is the first optimum in the
    // keep-preferring lexicographic order of decisions.
    void rec(int idx, double value) {
        if (value > best_value) {
            best_value = value;
            best_keep = keep;
        }
        if (idx == static_cast<int>(items.size())) return;
        if (value + suffix[idx] <= best_value) return;  // cannot strictly improve
        const Item& it = items[idx];
        SupportEdit edit(adj, k, it.i, it.j);
        if (!pair_creates_hom(fam, k, adj, it.i, it.j)) {
            keep[idx] = 1;
            rec(idx + 1, value + it.weight);
            keep[idx] = 0;
        }
        edit.revert();
        rec(idx + 1, value);
    }
};

// Feasibility caveat for the incremental pair check: it assumes the current
// support is hom-free, which both the BnB and the greedy maintain.
ExResult greedy_fallback(const std::vector<Item>& items, const ForbiddenFamily& fam, int k,
                         std::uint64_t seed) {
    std::vector<char> adj(static_cast<std::size_t>(k) * k, 0);
    std::vector<char> kept(items.size(), 0);
    double value = 0.0;
    for (std::size_t idx = 0; idx < items.size(); ++idx) {
        const Item& it = items[idx];
        SupportEdit edit(adj, k, it.i, it.j);
        if (pair_creates_hom(fam, k, adj, it.i, it.j)) {
            edit.revert();
        } else {
            kept[idx] = 1;
            value += it.weight;
        }
    }
    // Local search: try dropping one kept item and refilling greedily in a
    // seeded random order; keep the swap when the total strictly improves.
    std::mt19937_64 gen(seed);
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t drop = 0; drop < items.size(); ++drop) {
            if (!kept[drop]) continue;
            std::vector<char> adj2(static_cast<std::size_t>(k) * k, 0);
            std::vector<char> kept2(items.size(), 0);
            double value2 = 0.0;
            std::vector<std::size_t> order;
            for (std::size_t idx = 0; idx < items.size(); ++idx)
                if (idx != drop) order.push_back(idx);
            for (std::size_t s = order.size(); s > 1; --s)
                std::swap(order[s - 1], order[rng::uniform_below(gen, s)]);
            for (std::size_t idx : order) {
                const Item& it = items[idx];
                SupportEdit edit(adj2, k, it.i, it.j);
                if (pair_creates_hom(fam, k, adj2, it.i, it.j)) {
                    edit.revert();
                } else {
                    kept2[idx] = 1;
                    value2 += it.weight;
                }
            }
            if (value2 > value) {
                value = value2;
                kept = kept2;
                adj = adj2;
            }
        }
    }
    ExResult res;
    res.exact = false;
    for (std::size_t idx = 0; idx < items.size(); ++idx)
        if (kept[idx]) {
            res.support.kept.emplace_back(items[idx].i, items[idx].j);
            res.support.ordered_weight += 2.0 * items[idx].weight;
        }
    res.ex = value / (static_cast<double>(k) * k);
    return res;
}

}  // namespace

ExResult ex_value(const WeightedGraph& r, const ForbiddenFamily& fam, const ExOptions& opts) {
    const int k = r.n();
    const std::vector<Item> items = positive_items(r);
    if (k > opts.exact_cap) return greedy_fallback(items, fam, k, opts.seed);

    BnB bnb(items, fam, k);
    bnb.rec(0, 0.0);
    ExResult res;
    res.exact = true;
    res.ex = bnb.best_value / (static_cast<double>(k) * k);
    for (std::size_t idx = 0; idx < items.size(); ++idx)
        if (bnb.best_keep[idx]) {
            res.support.kept.emplace_back(items[idx].i, items[idx].j);
            res.support.ordered_weight += 2.0 * items[idx].weight;
        }
    return res;
}

double dist_forbhom(const WeightedGraph& r, const ForbiddenFamily& fam, const ExOptions& opts) {
    const double e_density = r.total_edge_weight() / (static_cast<double>(r.n()) * r.n());
    return 2.0 * (e_density - ex_value(r, fam, opts).ex);
}

bool is_recovering(const Graph& g, const Equipartition& p, const ForbiddenFamily& fam, double eps,
                   const ExOptions& opts) {
    return dist_forbhom(quotient(g, p).weights, fam, opts) <= eps;
}

RecoverResult find_recovering_partition(const Graph& g, const ForbiddenFamily& fam, double eps, double gamma,
                                        int k0, const RecoverOptions& opts) {
    RecoverResult res;
    res.achieved_dist = std::numeric_limits<double>::infinity();
    double cur_gamma = gamma;
    int cur_k0 = k0;
    for (int attempt = 0; attempt <= opts.max_retries; ++attempt) {
        res.retries = attempt;
        const FkResult fk = find_fk_partition(g, cur_gamma, std::min(cur_k0, g.n()), opts.fk);
        const double dist = dist_forbhom(quotient(g, fk.partition).weights, fam, opts.ex);
        if (dist < res.achieved_dist) {
            res.achieved_dist = dist;
            res.partition = fk.partition;
            res.gamma_used = cur_gamma;
        }
        if (dist <= eps) {
            res.found = true;
            res.partition = fk.partition;
            res.achieved_dist = dist;
            res.gamma_used = cur_gamma;
            return res;
        }
        cur_gamma /= 2.0;
        cur_k0 *= 2;
    }
    return res;
}

ColorabilityResult colorability_distance(const WeightedGraph& r, int colors, std::uint64_t seed) {
    if (colors < 1) throw std::invalid_argument("colorability_distance: need at least one color");
    const int k = r.n();
    ColorabilityResult res;

    // Monochromatic ordered mass of a full coloring, built incrementally:
    // assigning vertex v to color c adds r(v,v) plus 2 r(v,u) for each
    // earlier same-colored u.
    if (k <= kColorExactMaxN) {
        std::vector<int> coloring(k, -1), best(k, -1);
        double best_cost = std::numeric_limits<double>::infinity();
        // Color symmetry: vertex v may only use colors 0..min(max_used+1, colors-1).
        auto rec = [&](auto&& self, int v, int used, double cost) -> void {
            if (cost >= best_cost) return;
            if (v == k) {
                best_cost = cost;
                best = coloring;
                return;
            }
            const int limit = std::min(colors - 1, used);
            for (int c = 0; c <= limit; ++c) {
                double add = r.get(v, v);
                for (int u = 0; u < v; ++u)
                    if (coloring[u] == c) add += 2.0 * r.get(v, u);
                coloring[v] = c;
                self(self, v + 1, std::max(used, c + 1), cost + add);
                coloring[v] = -1;
            }
        };
        rec(rec, 0, 0, 0.0);
        res.distance = best_cost / (static_cast<double>(k) * k);
        res.coloring = best;
        res.exact = true;
        return res;
    }

    // Local search: seeded restarts + single-vertex recoloring descent.
    std::mt19937_64 gen(seed);
    auto cost_of = [&](const std::vector<int>& col) {
        double cost = 0.0;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (col[i] == col[j]) cost += r.get(i, j);
        return cost;
    };
    double best_cost = std::numeric_limits<double>::infinity();
    std::vector<int> best;
    for (int restart = 0; restart < 16; ++restart) {
        std::vector<int> col(k);
        for (int i = 0; i < k; ++i) col[i] = static_cast<int>(rng::uniform_below(gen, colors));
        bool improved = true;
        while (improved) {
            improved = false;
            for (int v = 0; v < k; ++v) {
                int best_c = col[v];
                double best_delta = 0.0;
                for (int c = 0; c < colors; ++c) {
                    if (c == col[v]) continue;
                    double delta = 0.0;
                    for (int u = 0; u < k; ++u) {
                        if (u == v) continue;
                        if (col[u] == c) delta += 2.0 * r.get(v, u);
                        if (col[u] == col[v]) delta -= 2.0 * r.get(v, u);
                    }
                    if (delta < best_delta) {
                        best_delta = delta;
                        best_c = c;
                    }
                }
                if (best_c != col[v]) {
                    col[v] = best_c;
                    improved = true;
                }
            }
        }
        const double cost = cost_of(col);
        if (cost < best_cost) {
            best_cost = cost;
            best = col;
        }
    }
    res.distance = best_cost / (static_cast<double>(k) * k);
    res.coloring = best;
    res.exact = false;
    return res;
}

Equipartition colorable_recovering_partition(const Graph& g, const std::vector<int>& coloring, int colors,
                                             double eps) {
    const int n = g.n();
    if (static_cast<int>(coloring.size()) != n)
        throw std::invalid_argument("colorable_recovering_partition: coloring size mismatch");
    for (int v = 0; v < n; ++v)
        if (coloring[v] < 0 || coloring[v] >= colors)
            throw std::invalid_argument("colorable_recovering_partition: color out of range");
    for (auto [u, v] : g.edges())
        if (coloring[u] == coloring[v])
            throw std::invalid_argument("colorable_recovering_partition: coloring not proper");
    if (!(eps > 0.0)) throw std::invalid_argument("colorable_recovering_partition: eps must be positive");

    const int k = static_cast<int>(std::ceil(static_cast<double>(colors) / eps - 1e-12));
    if (k > n) throw std::invalid_argument("colorable_recovering_partition: graph too small for ceil(r/eps) classes");

    // Class size schedule: the first n mod k classes take the extra vertex.
    const int q = n / k, rem = n % k;
    std::vector<int> sizes(k);
    for (int i = 0; i < k; ++i) sizes[i] = q + (i < rem ? 1 : 0);

    std::vector<std::vector<int>> by_color(colors);
    for (int v = 0; v < n; ++v) by_color[coloring[v]].push_back(v);

    // Carve color-pure classes while a full class fits inside one color
    // class, then pack the leftovers into mixed classes.
    std::vector<std::vector<int>> classes;
    int next_class = 0;
    std::vector<int> leftovers;
    for (int c = 0; c < colors; ++c) {
        std::size_t pos = 0;
        while (next_class < k &&
               by_color[c].size() - pos >= static_cast<std::size_t>(sizes[next_class])) {
            classes.emplace_back(by_color[c].begin() + pos, by_color[c].begin() + pos + sizes[next_class]);
            pos += sizes[next_class];
            ++next_class;
        }
        leftovers.insert(leftovers.end(), by_color[c].begin() + pos, by_color[c].end());
    }
    std::size_t pos = 0;
    while (next_class < k) {
        classes.emplace_back(leftovers.begin() + pos, leftovers.begin() + pos + sizes[next_class]);
        pos += sizes[next_class];
        ++next_class;
    }

    Equipartition p(n, std::move(classes));
    const ColorabilityResult check = colorability_distance(quotient(g, p).weights, colors);
    if (check.distance > eps + 1e-12)
        throw std::logic_error("colorable_recovering_partition: construction exceeded eps (bug)");
    return p;
}

}  // namespace forb
