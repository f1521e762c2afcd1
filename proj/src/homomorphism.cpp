#include "forb/homomorphism.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <omp.h>

namespace forb {

namespace {

// Earlier-neighbor lists under the fixed vertex order 0..a-1 of f.
std::vector<std::vector<int>> earlier_neighbors(const Graph& f) {
    std::vector<std::vector<int>> en(f.n());
    for (int v = 0; v < f.n(); ++v)
        for (int u = 0; u < v; ++u)
            if (f.has_edge(u, v)) en[v].push_back(u);
    return en;
}

double map_space_size(int n, int a) {
    double s = 1.0;
    for (int i = 0; i < a; ++i) s *= n;
    return s;
}

// Sum of hom weights over all extensions of the partial map phi[0..v-1],
// in target index order. Zero partial products are skipped; the skipped
// terms are exactly zero, so the sum is unchanged.
double subtree_sum(const WeightedGraph& r, const std::vector<std::vector<int>>& en, std::vector<int>& phi,
                   int v, int a, double partial) {
    if (v == a) return partial;
    const int n = r.n();
    double acc = 0.0;
    for (int x = 0; x < n; ++x) {
        double prod = partial;
        for (int u : en[v]) {
            prod *= r.get(phi[u], x);
            if (prod == 0.0) break;
        }
        if (prod == 0.0) continue;
        phi[v] = x;
        acc += subtree_sum(r, en, phi, v + 1, a, prod);
    }
    return acc;
}

double pairwise_fold(std::vector<double> vals) {
    std::size_t len = vals.size();
    while (len > 1) {
        std::size_t half = (len + 1) / 2;
        for (std::size_t i = 0; i < half; ++i) {
            const std::size_t lo = 2 * i;
            vals[i] = (lo + 1 < len) ? vals[lo] + vals[lo + 1] : vals[lo];
        }
        len = half;
    }
    return vals.empty() ? 0.0 : vals[0];
}

struct HomSearch {
    const Graph* f;
    int k;
    const std::vector<char>* adj;
    std::vector<int> order;          // vertices of f, high degree first
    std::vector<std::vector<int>> placed_neighbors;  // per order position

    HomSearch(const Graph& f_, int k_, const std::vector<char>& adj_) : f(&f_), k(k_), adj(&adj_) {
        order.resize(f->n());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return f->degree(a) > f->degree(b); });
        std::vector<int> pos(f->n());
        for (int i = 0; i < f->n(); ++i) pos[order[i]] = i;
        placed_neighbors.resize(f->n());
        for (int i = 0; i < f->n(); ++i) {
            for (int u : f->neighbors(order[i]))
                if (pos[u] < i) placed_neighbors[i].push_back(u);
        }
    }

    bool supported(int x, int y) const { return (*adj)[static_cast<std::size_t>(x) * k + y] != 0; }

    bool extend(std::vector<int>& phi, int i) const {
        if (i == f->n()) return true;
        const int v = order[i];
        for (int x = 0; x < k; ++x) {
            bool ok = true;
            for (int u : placed_neighbors[i]) {
                if (!supported(phi[u], x)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            phi[v] = x;
            if (extend(phi, i + 1)) return true;
        }
        return false;
    }
};

}  // namespace

double hom_density(const Graph& f, const WeightedGraph& r) {
    if (f.n() < 1) throw std::invalid_argument("hom_density: pattern must have a vertex");
    const int a = f.n();
    const int n = r.n();
    if (f.edge_count() == 0) return 1.0;  // every map has empty product 1

    const auto en = earlier_neighbors(f);
    std::vector<double> block(n, 0.0);
#pragma omp parallel for schedule(dynamic)
    for (int x0 = 0; x0 < n; ++x0) {
        std::vector<int> phi(a, -1);
        phi[0] = x0;
        block[x0] = subtree_sum(r, en, phi, 1, a, 1.0);
    }
    return pairwise_fold(std::move(block)) / map_space_size(n, a);
}

namespace serial {

double hom_density(const Graph& f, const WeightedGraph& r) {
    if (f.n() < 1) throw std::invalid_argument("hom_density: pattern must have a vertex");
    const int a = f.n();
    const int n = r.n();
    const double maps = map_space_size(n, a);
    if (maps > 0x1p31) throw std::invalid_argument("serial hom_density: map space too large");
    const auto edges = f.edges();

    std::vector<int> phi(a, 0);
    double acc = 0.0;
    while (true) {
        double prod = 1.0;
        for (auto [u, v] : edges) {
            prod *= r.get(phi[u], phi[v]);
            if (prod == 0.0) break;
        }
        acc += prod;
        int i = a - 1;
        while (i >= 0 && phi[i] == n - 1) phi[i--] = 0;
        if (i < 0) break;
        ++phi[i];
    }
    return acc / maps;
}

}  // namespace serial

bool hom_exists_in_support(const Graph& f, int k, const std::vector<char>& adj) {
    if (f.n() == 0) return true;
    if (k == 0) return false;
    HomSearch search(f, k, adj);
    std::vector<int> phi(f.n(), -1);
    return search.extend(phi, 0);
}

bool hom_exists_in_support_using_pair(const Graph& f, int k, const std::vector<char>& adj, int a, int b) {
    if (k == 0 || f.n() == 0) return false;
    HomSearch search(f, k, adj);
    // Pin one edge of f onto {a, b} (both orientations) and extend the rest.
    for (auto [u, v] : f.edges()) {
        for (int orient = 0; orient < (a == b ? 1 : 2); ++orient) {
            std::vector<int> phi(f.n(), -1);
            phi[u] = orient == 0 ? a : b;
            phi[v] = orient == 0 ? b : a;
            // Re-run the ordered search with u, v pre-placed.
            std::vector<char> fixed(f.n(), 0);
            fixed[u] = fixed[v] = 1;
            struct Ext {
                const HomSearch& s;
                const std::vector<char>& fixed;
                bool go(std::vector<int>& phi, int i) const {
                    if (i == s.f->n()) return true;
                    const int w = s.order[i];
                    if (fixed[w]) {
                        for (int p : s.placed_neighbors[i])
                            if (!s.supported(phi[p], phi[w])) return false;
                        return go(phi, i + 1);
                    }
                    for (int x = 0; x < s.k; ++x) {
                        bool ok = true;
                        for (int p : s.placed_neighbors[i]) {
                            if (!s.supported(phi[p], x)) {
                                ok = false;
                                break;
                            }
                        }
                        if (!ok) continue;
                        phi[w] = x;
                        if (go(phi, i + 1)) return true;
                    }
                    return false;
                }
            } ext{search, fixed};
            if (ext.go(phi, 0)) return true;
        }
    }
    return false;
}

bool hom_exists(const Graph& f, const WeightedGraph& support) {
    const int k = support.n();
    std::vector<char> adj(static_cast<std::size_t>(k) * k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) adj[static_cast<std::size_t>(i) * k + j] = support.get(i, j) > 0.0;
    return hom_exists_in_support(f, k, adj);
}

}  // namespace forb
