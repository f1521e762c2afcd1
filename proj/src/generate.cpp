#include "forb/generate.hpp"

#include <random>

#include "forb/counting.hpp"
#include "forb/partition.hpp"
#include "forb/rand.hpp"

namespace forb {

Graph generate_complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph generate_turan(int r, int n) {
    if (r < 1 || r > n) throw std::invalid_argument("generate_turan: need 1 <= r <= n");
    const Equipartition p = Equipartition::initial(n, r);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (p.class_of()[u] != p.class_of()[v]) g.add_edge(u, v);
    return g;
}

Graph generate_complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

Graph generate_er(int n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("generate_er: p outside [0,1]");
    std::mt19937_64 gen(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng::uniform01(gen) < p) g.add_edge(u, v);
    return g;
}

Graph generate_blowup_rounded(const WeightedGraph& cluster, int class_size, std::uint64_t seed) {
    if (class_size < 1) throw std::invalid_argument("generate_blowup_rounded: class size must be positive");
    const int k = cluster.n();
    const int n = k * class_size;
    std::mt19937_64 gen(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng::uniform01(gen) < cluster.get(u / class_size, v / class_size)) g.add_edge(u, v);
    return g;
}

Graph generate_planted_free(int n, double p, const ForbiddenFamily& fam, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    Graph g = generate_er(n, p, gen());
    while (true) {
        std::vector<std::vector<int>> copies;
        for (const Graph& f : fam.members()) {
            copies = subgraph_copy_edge_sets(g, f);
            if (!copies.empty()) break;
        }
        if (copies.empty()) return g;
        const auto edges = g.edges();
        const std::vector<int>& copy = copies.front();
        const int victim = copy[rng::uniform_below(gen, copy.size())];
        g.remove_edge(edges[victim].first, edges[victim].second);
    }
}

namespace {

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

}  // namespace

bool is_builtin_graph(const std::string& name) {
    return name == "K2" || name == "K3" || name == "K4" || name == "K5" || name == "P3" || name == "P4" ||
           name == "C4" || name == "C5";
}

Graph builtin_graph(const std::string& name) {
    if (name == "K2") return generate_complete(2);
    if (name == "K3") return generate_complete(3);
    if (name == "K4") return generate_complete(4);
    if (name == "K5") return generate_complete(5);
    if (name == "P3") return path_graph(3);
    if (name == "P4") return path_graph(4);
    if (name == "C4") return cycle_graph(4);
    if (name == "C5") return cycle_graph(5);
    throw std::invalid_argument("builtin_graph: unknown name '" + name + "'");
}

}  // namespace forb
