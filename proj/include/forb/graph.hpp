#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace forb {

/// Simple undirected graph on labeled vertices 0..n-1, loop-free,
/// adjacency stored as packed bitset rows.
class Graph {
public:
    Graph() : n_(0), words_(0) {}
    explicit Graph(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int n() const { return n_; }

    bool has_edge(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
    }

    void add_edge(int u, int v) {
        check_pair(u, v);
        set_bit(u, v);
        set_bit(v, u);
    }

    void remove_edge(int u, int v) {
        check_pair(u, v);
        clear_bit(u, v);
        clear_bit(v, u);
    }

    int degree(int u) const;
    std::size_t edge_count() const;

    /// Edges as (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    /// Neighbors of u in ascending order.
    std::vector<int> neighbors(int u) const;

    const std::uint64_t* row(int u) const { return bits_.data() + static_cast<std::size_t>(u) * words_; }
    int row_words() const { return words_; }

    bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    void check_pair(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("Graph: vertex out of range");
        if (u == v) throw std::invalid_argument("Graph: loops not allowed");
    }
    void set_bit(int u, int v) { bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= (std::uint64_t{1} << (v % 64)); }
    void clear_bit(int u, int v) { bits_[static_cast<std::size_t>(u) * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64)); }

    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;
};

/// Symmetric weight function [n]x[n] -> [0,1]; loops carry weight.
class WeightedGraph {
public:
    WeightedGraph() : n_(0) {}
    explicit WeightedGraph(int n, double fill = 0.0) : n_(n), w_(static_cast<std::size_t>(n) * n, fill) {
        if (n <= 0) throw std::invalid_argument("WeightedGraph: vertex count must be positive");
        check_weight(fill);
    }

    static WeightedGraph from_graph(const Graph& g) {
        WeightedGraph r(g.n());
        for (auto [u, v] : g.edges()) r.set(u, v, 1.0);
        return r;
    }

    int n() const { return n_; }

    double get(int i, int j) const { return w_[static_cast<std::size_t>(i) * n_ + j]; }

    void set(int i, int j, double v) {
        if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::invalid_argument("WeightedGraph: vertex out of range");
        check_weight(v);
        w_[static_cast<std::size_t>(i) * n_ + j] = v;
        w_[static_cast<std::size_t>(j) * n_ + i] = v;
    }

    /// e(R) = e(V,V)/2: half the sum over all ordered pairs, diagonal included once.
    double total_edge_weight() const {
        double s = 0.0;
        for (double x : w_) s += x;
        return s / 2.0;
    }

    bool operator==(const WeightedGraph& o) const { return n_ == o.n_ && w_ == o.w_; }

private:
    static void check_weight(double v) {
        if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument("WeightedGraph: weight outside [0,1]");
    }

    int n_;
    std::vector<double> w_;
};

/// Nonempty finite list of forbidden configurations, each with >= 1 edge.
class ForbiddenFamily {
public:
    explicit ForbiddenFamily(std::vector<Graph> members) : members_(std::move(members)) {
        if (members_.empty()) throw std::invalid_argument("ForbiddenFamily: empty family");
        for (const auto& f : members_)
            if (f.edge_count() == 0) throw std::invalid_argument("ForbiddenFamily: member with no edges");
    }

    const std::vector<Graph>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    const Graph& operator[](std::size_t i) const { return members_[i]; }

private:
    std::vector<Graph> members_;
};

}  // namespace forb
