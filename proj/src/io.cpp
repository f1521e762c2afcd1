#include "forb/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "forb/generate.hpp"

namespace forb {

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    return out;
}

}  // namespace

Graph read_graph(std::istream& in) {
    int n = 0;
    long long m = 0;
    if (!(in >> n >> m)) throw std::runtime_error("graph format: missing 'n m' line");
    if (n < 0 || m < 0) throw std::runtime_error("graph format: negative counts");
    Graph g(n);
    for (long long e = 0; e < m; ++e) {
        int u, v;
        if (!(in >> u >> v)) throw std::runtime_error("graph format: missing edge line");
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::runtime_error("graph format: endpoint out of range");
        if (u == v) throw std::runtime_error("graph format: loop rejected");
        if (g.has_edge(u, v)) throw std::runtime_error("graph format: duplicate edge rejected");
        g.add_edge(u, v);
    }
    return g;
}

Graph read_graph_file(const std::string& path) {
    auto in = open_input(path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    const auto edges = g.edges();
    out << g.n() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

void write_graph_file(const std::string& path, const Graph& g) {
    auto out = open_output(path);
    write_graph(out, g);
}

WeightedGraph read_weighted(std::istream& in) {
    std::string tag;
    int k = 0;
    if (!(in >> tag >> k) || tag != "n") throw std::runtime_error("weighted format: expected 'n <count>'");
    if (k <= 0) throw std::runtime_error("weighted format: vertex count must be positive");
    std::vector<double> vals(static_cast<std::size_t>(k) * k);
    for (auto& v : vals)
        if (!(in >> v)) throw std::runtime_error("weighted format: matrix entry missing");
    WeightedGraph r(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const double w = vals[static_cast<std::size_t>(i) * k + j];
            if (w != vals[static_cast<std::size_t>(j) * k + i])
                throw std::runtime_error("weighted format: matrix not symmetric");
            if (!(w >= 0.0 && w <= 1.0)) throw std::runtime_error("weighted format: weight outside [0,1]");
            if (j >= i) r.set(i, j, w);
        }
    return r;
}

WeightedGraph read_weighted_file(const std::string& path) {
    auto in = open_input(path);
    return read_weighted(in);
}

void write_weighted(std::ostream& out, const WeightedGraph& r) {
    out << "n " << r.n() << '\n';
    for (int i = 0; i < r.n(); ++i) {
        for (int j = 0; j < r.n(); ++j) {
            if (j) out << ' ';
            out << format_double(r.get(i, j));
        }
        out << '\n';
    }
}

void write_weighted_file(const std::string& path, const WeightedGraph& r) {
    auto out = open_output(path);
    write_weighted(out, r);
}

Equipartition read_partition(std::istream& in, int n) {
    std::vector<std::vector<int>> classes;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<int> cls;
        int v;
        while (ls >> v) cls.push_back(v);
        if (!cls.empty()) classes.push_back(std::move(cls));
    }
    return Equipartition(n, std::move(classes));
}

Equipartition read_partition_file(const std::string& path, int n) {
    auto in = open_input(path);
    return read_partition(in, n);
}

void write_partition(std::ostream& out, const Equipartition& p) { out << p.encode(); }

void write_partition_file(const std::string& path, const Equipartition& p) {
    auto out = open_output(path);
    write_partition(out, p);
}

ForbiddenFamily family_from_spec(const std::string& spec) {
    std::vector<Graph> members;
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        if (is_builtin_graph(token))
            members.push_back(builtin_graph(token));
        else
            members.push_back(read_graph_file(token));
    }
    return ForbiddenFamily(std::move(members));
}

std::string family_spec_label(const std::string& spec) {
    std::string label = spec;
    for (char& c : label)
        if (c == ',') c = '+';
    return label;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    // trim to the shortest representation that round-trips
    for (int prec = 1; prec < 17; ++prec) {
        char shorter[64];
        std::snprintf(shorter, sizeof(shorter), "%.*g", prec, v);
        double back;
        std::sscanf(shorter, "%lf", &back);
        if (back == v) return shorter;
    }
    return buf;
}

std::string CsvDocument::body() const {
    std::string out = header_;
    if (!header_.empty()) out += '\n';
    for (const auto& r : rows_) {
        out += r;
        out += '\n';
    }
    return out;
}

std::string CsvDocument::full() const {
    std::string out;
    for (const auto& c : comments_) {
        out += "# ";
        out += c;
        out += '\n';
    }
    return out + body();
}

}  // namespace forb
