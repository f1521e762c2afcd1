#include "forb/partition.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace forb {

Equipartition::Equipartition(int n, std::vector<std::vector<int>> classes) : n_(n), classes_(std::move(classes)) {
    if (n_ <= 0) throw std::invalid_argument("Equipartition: empty ground set");
    class_of_.assign(n_, -1);
    int covered = 0;
    std::size_t min_size = static_cast<std::size_t>(n_), max_size = 0;
    for (auto& cls : classes_) {
        if (cls.empty()) throw std::invalid_argument("Equipartition: empty class");
        std::sort(cls.begin(), cls.end());
        min_size = std::min(min_size, cls.size());
        max_size = std::max(max_size, cls.size());
        for (int v : cls) {
            if (v < 0 || v >= n_) throw std::invalid_argument("Equipartition: vertex out of range");
            if (class_of_[v] != -1) throw std::invalid_argument("Equipartition: vertex in two classes");
            class_of_[v] = 0;  // provisional; reassigned after class sort
            ++covered;
        }
    }
    if (covered != n_) throw std::invalid_argument("Equipartition: classes do not cover the ground set");
    if (max_size - min_size > 1) throw std::invalid_argument("Equipartition: class sizes differ by more than 1");
    std::sort(classes_.begin(), classes_.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
    for (int i = 0; i < static_cast<int>(classes_.size()); ++i)
        for (int v : classes_[i]) class_of_[v] = i;
}

Equipartition Equipartition::initial(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("Equipartition: class count out of range");
    const int q = n / k, r = n % k;
    std::vector<std::vector<int>> classes;
    classes.reserve(k);
    int next = 0;
    for (int i = 0; i < k; ++i) {
        const int size = q + (i < r ? 1 : 0);
        std::vector<int> cls(size);
        for (int j = 0; j < size; ++j) cls[j] = next++;
        classes.push_back(std::move(cls));
    }
    return Equipartition(n, std::move(classes));
}

std::string Equipartition::encode() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        for (std::size_t j = 0; j < classes_[i].size(); ++j) {
            if (j) out << ' ';
            out << classes_[i][j];
        }
        out << '\n';
    }
    return out.str();
}

ClusterGraph quotient(const Graph& g, const Equipartition& p) {
    if (g.n() != p.n()) throw std::invalid_argument("quotient: partition/ground-set mismatch");
    const int k = p.k();
    WeightedGraph w(k);
    std::vector<std::vector<long long>> ordered(k, std::vector<long long>(k, 0));
    for (int u = 0; u < g.n(); ++u)
        for (int v : g.neighbors(u)) ++ordered[p.class_of()[u]][p.class_of()[v]];
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            const double denom = static_cast<double>(p.class_size(i)) * p.class_size(j);
            w.set(i, j, static_cast<double>(ordered[i][j]) / denom);
        }
    ClusterGraph out{std::move(w), {}};
    out.class_sizes.resize(k);
    for (int i = 0; i < k; ++i) out.class_sizes[i] = p.class_size(i);
    return out;
}

ClusterGraph quotient_weighted(const WeightedGraph& w, const Equipartition& p) {
    if (w.n() != p.n()) throw std::invalid_argument("quotient_weighted: partition/ground-set mismatch");
    const int k = p.k();
    WeightedGraph q(k);
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            double sum = 0.0;
            for (int u : p.classes()[i])
                for (int v : p.classes()[j]) sum += w.get(u, v);
            q.set(i, j, sum / (static_cast<double>(p.class_size(i)) * p.class_size(j)));
        }
    ClusterGraph out{std::move(q), {}};
    out.class_sizes.resize(k);
    for (int i = 0; i < k; ++i) out.class_sizes[i] = p.class_size(i);
    return out;
}

WeightedGraph blowup(const Graph& g, const Equipartition& p) {
    const ClusterGraph cg = quotient(g, p);
    WeightedGraph w(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u; v < g.n(); ++v) w.set(u, v, cg.weights.get(p.class_of()[u], p.class_of()[v]));
    return w;
}

namespace {

struct EquipartitionGen {
    int n, k, q, cap_plus;  // class sizes are q or q+1
    const std::function<void(const Equipartition&)>* visit;
    std::vector<std::vector<int>> classes;

    void rec(int v) {
        if (v == n) {
            if (static_cast<int>(classes.size()) != k) return;
            for (const auto& cls : classes)
                if (static_cast<int>(cls.size()) < q) return;  // a class ended undersized
            std::vector<std::vector<int>> copy = classes;
            Equipartition p(n, std::move(copy));
            (*visit)(p);
            return;
        }
        const int cnt = static_cast<int>(classes.size());
        const int rem = n - v;
        // Feasibility: every class must end with q or q+1 vertices and all k
        // classes must open.
        long long min_need = static_cast<long long>(k - cnt) * q;
        long long max_room = static_cast<long long>(k - cnt) * (q + 1);
        for (const auto& cls : classes) {
            min_need += std::max(0, q - static_cast<int>(cls.size()));
            max_room += (q + 1) - static_cast<int>(cls.size());
        }
        if (rem < min_need || rem > max_room) return;
        for (int c = 0; c < cnt; ++c) {
            if (static_cast<int>(classes[c].size()) >= q + 1) continue;
            classes[c].push_back(v);
            rec(v + 1);
            classes[c].pop_back();
        }
        if (cnt < k) {  // open a new class; v is its minimum element
            classes.emplace_back(1, v);
            rec(v + 1);
            classes.pop_back();
        }
    }
};

}  // namespace

void for_each_equipartition(int n, int k, const std::function<void(const Equipartition&)>& visit, int cap) {
    if (n > cap) throw std::invalid_argument("for_each_equipartition: n exceeds enumeration cap");
    if (k < 1 || k > n) throw std::invalid_argument("for_each_equipartition: class count out of range");
    EquipartitionGen gen{n, k, n / k, 0, &visit, {}};
    gen.rec(0);
}

std::vector<Equipartition> enumerate_equipartitions(int n, int k, int cap) {
    std::vector<Equipartition> out;
    for_each_equipartition(n, k, [&](const Equipartition& p) { out.push_back(p); }, cap);
    return out;
}

FkCheck is_fk_regular(const Graph& g, const Equipartition& p, double gamma) {
    if (gamma < 0.0) throw std::invalid_argument("is_fk_regular: gamma must be nonnegative");
    const CutResult cut = cut_distance_exact(WeightedGraph::from_graph(g), blowup(g, p));
    FkCheck out;
    out.dcut = cut.value;
    out.regular = cut.value <= gamma;
    if (!out.regular) {
        out.witness_s = cut.s;
        out.witness_t = cut.t;
    }
    return out;
}

namespace {

// Split every class by membership in S and T, then rebuild an equipartition:
// cells are kept in (class, bucket) order and the vertex stream is cut into
// balanced chunks, so surplus vertices flow to the next class in ascending
// label order.
Equipartition refine_and_equalize(const Equipartition& p, const std::vector<int>& s_set,
                                  const std::vector<int>& t_set, int min_k) {
    const int n = p.n();
    std::vector<char> in_s(n, 0), in_t(n, 0);
    for (int v : s_set) in_s[v] = 1;
    for (int v : t_set) in_t[v] = 1;

    std::vector<int> stream;
    stream.reserve(n);
    int cells = 0;
    for (const auto& cls : p.classes()) {
        for (int bucket = 3; bucket >= 0; --bucket) {
            bool any = false;
            for (int v : cls) {
                if (in_s[v] * 2 + in_t[v] == bucket) {
                    stream.push_back(v);
                    any = true;
                }
            }
            cells += any ? 1 : 0;
        }
    }
    const int k_new = std::min(n, std::max(cells, min_k));
    const int q = n / k_new, r = n % k_new;
    std::vector<std::vector<int>> classes;
    classes.reserve(k_new);
    std::size_t pos = 0;
    for (int i = 0; i < k_new; ++i) {
        const int size = q + (i < r ? 1 : 0);
        classes.emplace_back(stream.begin() + pos, stream.begin() + pos + size);
        pos += size;
    }
    return Equipartition(n, std::move(classes));
}

}  // namespace

FkResult find_fk_partition(const Graph& g, double gamma, int k0, const FkOptions& opts) {
    if (gamma < 0.0) throw std::invalid_argument("find_fk_partition: gamma must be nonnegative");
    const int n = g.n();
    const bool exact = n <= kCutExactMaxN;
    int cap = opts.max_iterations;
    if (cap <= 0) {
        cap = gamma > 0.0 ? static_cast<int>(std::ceil(1.0 / (gamma * gamma))) : n + 1;
        cap = std::min(cap, 100000);
    }

    Equipartition p = Equipartition::initial(n, k0);
    const WeightedGraph gw = WeightedGraph::from_graph(g);
    FkResult res{p, false, 0.0, 0, false};
    for (int it = 0; it <= cap; ++it) {
        res.iterations = it;
        std::vector<int> viol_s, viol_t;
        double violation = 0.0;
        if (exact) {
            const CutResult cut = cut_distance_exact(gw, blowup(g, p));
            violation = cut.value;
            viol_s = cut.s;
            viol_t = cut.t;
        } else {
            const CutBound bound = cut_distance_heuristic(gw, blowup(g, p));
            violation = bound.lower;
            viol_s = bound.s;
            viol_t = bound.t;
        }
        res.partition = p;
        res.achieved = violation;
        if (violation <= gamma) {
            res.certified = exact;
            return res;
        }
        if (it == cap) break;
        Equipartition refined = refine_and_equalize(p, viol_s, viol_t, p.k());
        if (refined == p) {
            if (p.k() == n) break;  // discrete partition, nothing to refine
            refined = refine_and_equalize(p, viol_s, viol_t, std::min(n, 2 * p.k()));
        }
        p = std::move(refined);
    }
    res.cap_exceeded = true;
    return res;
}

}  // namespace forb
