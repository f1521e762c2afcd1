#include "forb/counting.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numeric>
#include <set>

#include <omp.h>

namespace forb {

namespace {

using boost::multiprecision::msb;

struct CopyEnum {
    const Graph& g;
    const Graph& f;
    const std::vector<std::vector<int>>& edge_id;  // pair -> edge index in g
    std::vector<int> order;                        // f's vertices, high degree first
    std::vector<std::vector<int>> placed_neighbors;
    std::vector<int> phi;
    std::vector<char> used;
    std::set<std::vector<int>>* out;

    void run() {
        phi.assign(f.n(), -1);
        used.assign(g.n(), 0);
        rec(0);
    }

    void rec(int i) {
        if (i == f.n()) {
            std::vector<int> ids;
            ids.reserve(f.edge_count());
            for (auto [u, v] : f.edges()) ids.push_back(edge_id[phi[u]][phi[v]]);
            std::sort(ids.begin(), ids.end());
            out->insert(std::move(ids));
            return;
        }
        const int v = order[i];
        for (int x = 0; x < g.n(); ++x) {
            if (used[x]) continue;
            bool ok = true;
            for (int u : placed_neighbors[i]) {
                if (!g.has_edge(phi[u], x)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            phi[v] = x;
            used[x] = 1;
            rec(i + 1);
            used[x] = 0;
        }
    }
};

void enumerate_copies(const Graph& g, const Graph& f, std::set<std::vector<int>>& out,
                      const std::vector<std::vector<int>>& edge_id) {
    if (f.n() > g.n()) return;
    CopyEnum ce{g, f, edge_id, {}, {}, {}, {}, &out};
    ce.order.resize(f.n());
    std::iota(ce.order.begin(), ce.order.end(), 0);
    std::stable_sort(ce.order.begin(), ce.order.end(),
                     [&](int a, int b) { return f.degree(a) > f.degree(b); });
    std::vector<int> pos(f.n());
    for (int i = 0; i < f.n(); ++i) pos[ce.order[i]] = i;
    ce.placed_neighbors.resize(f.n());
    for (int i = 0; i < f.n(); ++i)
        for (int u : f.neighbors(ce.order[i]))
            if (pos[u] < i) ce.placed_neighbors[i].push_back(u);
    ce.run();
}

std::vector<std::vector<int>> edge_id_table(const Graph& g) {
    const auto edges = g.edges();
    std::vector<std::vector<int>> edge_id(g.n(), std::vector<int>(g.n(), -1));
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        edge_id[edges[e].first][edges[e].second] = e;
        edge_id[edges[e].second][edges[e].first] = e;
    }
    return edge_id;
}

// Preprocessed instance in CSR form: copies remapped to the DFS edge order,
// with per-edge conflict lists.
struct CountProblem {
    int m = 0;
    int num_copies = 0;
    bool word64 = false;
    std::vector<int> through_off, through_dat;    // copies containing edge i
    std::vector<int> complete_off, complete_dat;  // copies whose maximum edge is i
    std::vector<int> copy_off, copy_dat;          // edges of copy c, ascending
    std::vector<int> copy_size;
    std::vector<std::uint64_t> others64;          // fast path: copy mask minus its max edge
};

CountProblem build_problem(const Graph& g, const ForbiddenFamily& fam) {
    const int m = static_cast<int>(g.edge_count());
    const auto edge_id = edge_id_table(g);

    std::set<std::vector<int>> copy_set;
    for (const Graph& f : fam.members()) enumerate_copies(g, f, copy_set, edge_id);

    // Drop copies that contain another copy: the smaller one already forbids
    // every superset.
    std::vector<std::vector<int>> copies(copy_set.begin(), copy_set.end());
    std::stable_sort(copies.begin(), copies.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    std::vector<std::vector<int>> minimal;
    for (const auto& c : copies) {
        bool redundant = false;
        for (const auto& kept : minimal) {
            if (std::includes(c.begin(), c.end(), kept.begin(), kept.end())) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(c);
    }

    // Reorder edges: most copy-laden first; ties in vertex-extension order
    // (max endpoint, then min) so copies complete as early as possible.
    const auto edges = g.edges();
    std::vector<int> copies_through(m, 0);
    for (const auto& c : minimal)
        for (int e : c) ++copies_through[e];
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
        if (copies_through[a] != copies_through[b]) return copies_through[a] > copies_through[b];
        return std::pair(edges[a].second, edges[a].first) < std::pair(edges[b].second, edges[b].first);
    });
    std::vector<int> new_id(m);
    for (int i = 0; i < m; ++i) new_id[perm[i]] = i;

    const int nc = static_cast<int>(minimal.size());
    CountProblem prob;
    prob.m = m;
    prob.word64 = m <= 64;
    prob.num_copies = nc;
    prob.copy_size.resize(nc);
    if (prob.word64) prob.others64.resize(nc);

    std::vector<int> through_cnt(m, 0), complete_cnt(m, 0);
    for (auto& ids : minimal) {
        for (int& e : ids) e = new_id[e];
        std::sort(ids.begin(), ids.end());
        for (int e : ids) ++through_cnt[e];
        ++complete_cnt[ids.back()];
    }
    prob.through_off.assign(m + 1, 0);
    prob.complete_off.assign(m + 1, 0);
    prob.copy_off.assign(nc + 1, 0);
    for (int e = 0; e < m; ++e) {
        prob.through_off[e + 1] = prob.through_off[e] + through_cnt[e];
        prob.complete_off[e + 1] = prob.complete_off[e] + complete_cnt[e];
    }
    prob.through_dat.resize(prob.through_off[m]);
    prob.complete_dat.resize(prob.complete_off[m]);
    std::vector<int> tpos(prob.through_off.begin(), prob.through_off.end() - 1);
    std::vector<int> cpos(prob.complete_off.begin(), prob.complete_off.end() - 1);
    for (int c = 0; c < nc; ++c) {
        const auto& ids = minimal[c];
        prob.copy_size[c] = static_cast<int>(ids.size());
        prob.copy_off[c + 1] = prob.copy_off[c] + static_cast<int>(ids.size());
        for (int e : ids) {
            prob.copy_dat.push_back(e);
            prob.through_dat[tpos[e]++] = c;
        }
        prob.complete_dat[cpos[ids.back()]++] = c;
        if (prob.word64) {
            std::uint64_t mask = 0;
            for (std::size_t i = 0; i + 1 < ids.size(); ++i) mask |= std::uint64_t{1} << ids[i];
            prob.others64[c] = mask;
        }
    }
    return prob;
}

constexpr int kBudgetCheckInterval = 8192;

struct SharedBudget {
    std::atomic<std::uint64_t> total{0};
    std::atomic<bool> abort{false};
    std::uint64_t budget = 0;

    // Overshoot by up to one interval per task is fine (the budget is a
    // guard, not an exact cap).
    bool flush(std::uint64_t& local) {
        const std::uint64_t seen = total.fetch_add(local, std::memory_order_relaxed) + local;
        local = 0;
        if (seen > budget) abort.store(true, std::memory_order_relaxed);
        return abort.load(std::memory_order_relaxed);
    }
};

// One DFS worker over a subtree. Counts are a histogram
// hist[r] = number of subtrees that collapsed to 2^r leaves, so the hot loop
// never touches a big integer. Edges through which no copy is still alive
// are skipped with `free` doublings instead of branching.
struct Search {
    const CountProblem& prob;
    SharedBudget& budget;
    std::uint64_t included = 0;       // fast path only
    std::vector<int> included_count;  // generic path: included edges per copy
    std::vector<char> killed;
    std::vector<int> alive_through;   // alive copies containing edge i
    std::vector<int> undo;
    int alive = 0;
    std::vector<std::uint64_t> hist;
    std::uint64_t local_nodes = 0;
    std::uint64_t since_check = 0;
    bool aborted = false;

    Search(const CountProblem& p, SharedBudget& b) : prob(p), budget(b) {
        killed.assign(p.num_copies, 0);
        if (!p.word64) included_count.assign(p.num_copies, 0);
        alive = p.num_copies;
        alive_through.assign(p.m, 0);
        for (int e = 0; e < p.m; ++e) alive_through[e] = p.through_off[e + 1] - p.through_off[e];
        hist.assign(p.m + 1, 0);
    }

    bool tick() {
        ++local_nodes;
        if (++since_check >= kBudgetCheckInterval) {
            since_check = 0;
            if (budget.flush(local_nodes)) {
                aborted = true;
                return false;
            }
        }
        return true;
    }

    void finish() { budget.flush(local_nodes); }

    void kill(int c) {
        killed[c] = 1;
        --alive;
        for (int t = prob.copy_off[c]; t < prob.copy_off[c + 1]; ++t) --alive_through[prob.copy_dat[t]];
        undo.push_back(c);
    }

    void revive(int c) {
        killed[c] = 0;
        ++alive;
        for (int t = prob.copy_off[c]; t < prob.copy_off[c + 1]; ++t) ++alive_through[prob.copy_dat[t]];
    }

    bool include_conflict(int i) const {
        if (prob.word64) {
            for (int t = prob.complete_off[i]; t < prob.complete_off[i + 1]; ++t) {
                const int c = prob.complete_dat[t];
                if ((prob.others64[c] & ~included) == 0) return true;
            }
            return false;
        }
        for (int t = prob.through_off[i]; t < prob.through_off[i + 1]; ++t) {
            const int c = prob.through_dat[t];
            if (included_count[c] == prob.copy_size[c] - 1 && prob.copy_dat[prob.copy_off[c + 1] - 1] <= i)
                return true;
        }
        return false;
    }

    // `free` counts skipped unconstrained edges; each multiplies the subtree
    // by 2. An alive copy always has its maximum edge undecided, so the skip
    // loop stops before m whenever alive > 0.
    void rec(int i, int free) {
        if (!tick()) return;
        if (alive == 0) {
            ++hist[prob.m - i + free];
            return;
        }
        while (alive_through[i] == 0) {
            ++i;
            ++free;
        }
        if (!include_conflict(i)) {
            if (prob.word64) {
                included |= std::uint64_t{1} << i;
                rec(i + 1, free);
                included &= ~(std::uint64_t{1} << i);
            } else {
                for (int t = prob.through_off[i]; t < prob.through_off[i + 1]; ++t)
                    ++included_count[prob.through_dat[t]];
                rec(i + 1, free);
                for (int t = prob.through_off[i]; t < prob.through_off[i + 1]; ++t)
                    --included_count[prob.through_dat[t]];
            }
            if (aborted) return;
        }
        const std::size_t mark = undo.size();
        for (int t = prob.through_off[i]; t < prob.through_off[i + 1]; ++t) {
            const int c = prob.through_dat[t];
            if (!killed[c]) kill(c);
        }
        rec(i + 1, free);
        while (undo.size() > mark) {
            revive(undo.back());
            undo.pop_back();
        }
    }
};

struct TaskState {
    std::uint64_t included = 0;
    std::vector<int> included_count;
    std::vector<char> killed;
    std::vector<int> alive_through;
    int alive = 0;
    int depth = 0;
    int free = 0;
};

// Expand the DFS to `split_depth` decisions, collecting the surviving
// frontier states as parallel tasks; subtrees resolved during expansion go
// straight into base_hist.
void expand(const CountProblem& prob, TaskState st, int decisions_left, std::vector<TaskState>& tasks,
            std::vector<std::uint64_t>& base_hist) {
    if (st.alive == 0) {
        ++base_hist[prob.m - st.depth + st.free];
        return;
    }
    while (st.alive_through[st.depth] == 0) {
        ++st.depth;
        ++st.free;
    }
    if (decisions_left == 0) {
        tasks.push_back(std::move(st));
        return;
    }
    const int i = st.depth;
    bool conflict = false;
    if (prob.word64) {
        for (int t = prob.complete_off[i]; t < prob.complete_off[i + 1] && !conflict; ++t)
            conflict = (prob.others64[prob.complete_dat[t]] & ~st.included) == 0;
    } else {
        for (int t = prob.through_off[i]; t < prob.through_off[i + 1] && !conflict; ++t) {
            const int c = prob.through_dat[t];
            conflict = st.included_count[c] == prob.copy_size[c] - 1 &&
                       prob.copy_dat[prob.copy_off[c + 1] - 1] <= i;
        }
    }
    if (!conflict) {
        TaskState inc = st;
        if (prob.word64)
            inc.included |= std::uint64_t{1} << i;
        else
            for (int t = prob.through_off[i]; t < prob.through_off[i + 1]; ++t)
                ++inc.included_count[prob.through_dat[t]];
        ++inc.depth;
        expand(prob, std::move(inc), decisions_left - 1, tasks, base_hist);
    }
    TaskState exc = std::move(st);
    for (int t = prob.through_off[i]; t < prob.through_off[i + 1]; ++t) {
        const int c = prob.through_dat[t];
        if (!exc.killed[c]) {
            exc.killed[c] = 1;
            --exc.alive;
            for (int e = prob.copy_off[c]; e < prob.copy_off[c + 1]; ++e)
                --exc.alive_through[prob.copy_dat[e]];
        }
    }
    ++exc.depth;
    expand(prob, std::move(exc), decisions_left - 1, tasks, base_hist);
}

BigInt hist_to_count(const std::vector<std::uint64_t>& hist) {
    BigInt total = 0;
    for (std::size_t r = 0; r < hist.size(); ++r)
        if (hist[r]) total += BigInt(hist[r]) << r;
    return total;
}

CountResult run_count(const Graph& g, const ForbiddenFamily& fam, const CountOptions& opts, bool parallel) {
    const auto t0 = std::chrono::steady_clock::now();
    CountResult res;
    res.n = g.n();

    const CountProblem prob = build_problem(g, fam);
    if (prob.num_copies == 0) {
        res.count = BigInt(1) << prob.m;  // every spanning subgraph is free
        res.z = g.n() > 0 ? log2_bigint(res.count) / (static_cast<double>(g.n()) * g.n()) : 0.0;
        res.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        return res;
    }

    SharedBudget budget;
    budget.budget = opts.node_budget;

    std::vector<std::uint64_t> hist(prob.m + 1, 0);
    if (!parallel || opts.split_depth <= 0) {
        Search s(prob, budget);
        s.rec(0, 0);
        s.finish();
        hist = s.hist;
    } else {
        TaskState root;
        root.killed.assign(prob.num_copies, 0);
        if (!prob.word64) root.included_count.assign(prob.num_copies, 0);
        root.alive = prob.num_copies;
        root.alive_through.assign(prob.m, 0);
        for (int e = 0; e < prob.m; ++e)
            root.alive_through[e] = prob.through_off[e + 1] - prob.through_off[e];
        std::vector<TaskState> tasks;
        expand(prob, std::move(root), std::min(opts.split_depth, prob.m), tasks, hist);

        std::vector<std::vector<std::uint64_t>> task_hist(tasks.size());
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t t = 0; t < static_cast<std::int64_t>(tasks.size()); ++t) {
            Search s(prob, budget);
            s.included = tasks[t].included;
            if (!prob.word64) s.included_count = tasks[t].included_count;
            s.killed = tasks[t].killed;
            s.alive = tasks[t].alive;
            s.alive_through = tasks[t].alive_through;
            s.rec(tasks[t].depth, tasks[t].free);
            s.finish();
            task_hist[t] = std::move(s.hist);
        }
        for (const auto& th : task_hist)
            for (std::size_t r = 0; r < th.size(); ++r) hist[r] += th[r];
    }

    res.nodes = budget.total.load();
    if (budget.abort.load()) throw BudgetExceededError(res.nodes);

    res.count = hist_to_count(hist);
    res.z = log2_bigint(res.count) / (static_cast<double>(g.n()) * g.n());
    res.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

}  // namespace

CountResult count_forb(const Graph& g, const ForbiddenFamily& fam, const CountOptions& opts) {
    return run_count(g, fam, opts, true);
}

namespace serial {
CountResult count_forb(const Graph& g, const ForbiddenFamily& fam, const CountOptions& opts) {
    return run_count(g, fam, opts, false);
}
}  // namespace serial

double z_value(const Graph& g, const ForbiddenFamily& fam, const CountOptions& opts) {
    return count_forb(g, fam, opts).z;
}

double binary_entropy(double x) {
    if (!(x > 0.0 && x < 1.0)) throw std::invalid_argument("binary_entropy: x outside (0,1)");
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

bool entropy_binomial_bound_check(int n, int k) {
    if (k < 1 || 2 * k >= n) throw std::invalid_argument("entropy_binomial_bound_check: need 1 <= k < n/2");
    BigInt lhs = 0;
    for (int i = 0; i <= k; ++i) lhs += binomial(n, i);
    const double rhs_exponent = binary_entropy(static_cast<double>(k) / n) * n;
    return log2_bigint(lhs) <= rhs_exponent;
}

double log2_bigint(const BigInt& v) {
    if (v <= 0) throw std::invalid_argument("log2_bigint: nonpositive value");
    const unsigned b = msb(v);
    if (b <= 52) return std::log2(v.convert_to<double>());
    const BigInt top = v >> (b - 52);
    return std::log2(top.convert_to<double>()) + static_cast<double>(b - 52);
}

std::vector<std::vector<int>> subgraph_copy_edge_sets(const Graph& g, const Graph& f) {
    std::set<std::vector<int>> out;
    enumerate_copies(g, f, out, edge_id_table(g));
    return {out.begin(), out.end()};
}

}  // namespace forb
