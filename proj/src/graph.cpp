#include "forb/graph.hpp"

#include <bit>

namespace forb {

int Graph::degree(int u) const {
    int d = 0;
    const std::uint64_t* r = row(u);
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

std::size_t Graph::edge_count() const {
    std::size_t total = 0;
    for (int u = 0; u < n_; ++u) total += static_cast<std::size_t>(degree(u));
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count());
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::neighbors(int u) const {
    std::vector<int> out;
    out.reserve(degree(u));
    for (int v = 0; v < n_; ++v)
        if (has_edge(u, v)) out.push_back(v);
    return out;
}

}  // namespace forb
