#include "forb/distance.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <random>

#include <omp.h>

namespace forb {

namespace {

void require_same_size(int a, int b) {
    if (a != b) throw std::invalid_argument("distance: size mismatch");
}

std::vector<double> deviation_matrix(const WeightedGraph& r1, const WeightedGraph& r2) {
    const int n = r1.n();
    std::vector<double> d(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d[static_cast<std::size_t>(i) * n + j] = r1.get(i, j) - r2.get(i, j);
    return d;
}

// For fixed S (as column sums colsum_j = sum_{i in S} D(i,j)), the optimal T
// is the set of columns with uniform sign; both signs of the objective are
// covered by taking max(sum of positives, -(sum of negatives)).
double best_value_for_colsums(const std::vector<double>& colsum, bool* use_positive) {
    double pos = 0.0, neg = 0.0;
    for (double c : colsum) {
        if (c > 0.0)
            pos += c;
        else
            neg += c;
    }
    if (pos >= -neg) {
        if (use_positive) *use_positive = true;
        return pos;
    }
    if (use_positive) *use_positive = false;
    return -neg;
}

std::vector<int> members_of_mask(std::uint64_t mask, int n) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1u) out.push_back(i);
    return out;
}

std::vector<int> t_witness(const std::vector<double>& colsum, bool positive) {
    std::vector<int> out;
    for (int j = 0; j < static_cast<int>(colsum.size()); ++j) {
        if (positive ? colsum[j] > 0.0 : colsum[j] < 0.0) out.push_back(j);
    }
    return out;
}

struct BlockBest {
    double value = -1.0;
    std::uint64_t s_mask = 0;
    bool positive = true;
};

}  // namespace

double edit_distance(const Graph& g1, const Graph& g2) {
    require_same_size(g1.n(), g2.n());
    const int n = g1.n();
    std::size_t diff = 0;
    for (int u = 0; u < n; ++u) {
        const std::uint64_t* a = g1.row(u);
        const std::uint64_t* b = g2.row(u);
        for (int w = 0; w < g1.row_words(); ++w) diff += std::popcount(a[w] ^ b[w]);
    }
    // rows double-count unordered pairs, so diff/2 edges differ
    return static_cast<double>(diff) / (static_cast<double>(n) * n);
}

double l1_distance(const WeightedGraph& r1, const WeightedGraph& r2) {
    require_same_size(r1.n(), r2.n());
    const int n = r1.n();
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s += std::abs(r1.get(i, j) - r2.get(i, j));
    return s / (static_cast<double>(n) * n);
}

CutResult cut_distance_exact(const WeightedGraph& r1, const WeightedGraph& r2) {
    require_same_size(r1.n(), r2.n());
    const int n = r1.n();
    if (n > kCutExactMaxN) throw std::invalid_argument("cut_distance_exact: n exceeds exact-mode cap");
    const std::vector<double> d = deviation_matrix(r1, r2);

    // Enumerate S by fixing the top `p` vertices per block and walking the
    // remaining 2^(n-p) subsets in Gray-code order with incremental column
    // sums. Blocks are merged in index order, so the result does not depend
    // on the thread count.
    const int p = std::max(0, std::min(8, n - 10));
    const int low = n - p;
    const std::uint64_t blocks = std::uint64_t{1} << p;
    std::vector<BlockBest> best(blocks);

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
        std::vector<double> colsum(n, 0.0);
        std::uint64_t high_mask = 0;
        for (int i = 0; i < p; ++i) {
            if ((static_cast<std::uint64_t>(b) >> i) & 1u) {
                const int v = low + i;
                high_mask |= std::uint64_t{1} << v;
                for (int j = 0; j < n; ++j) colsum[j] += d[static_cast<std::size_t>(v) * n + j];
            }
        }
        std::vector<char> in_s(low, 0);
        BlockBest bb;
        std::uint64_t low_mask = 0;
        bool positive = true;
        double val = best_value_for_colsums(colsum, &positive);
        bb.value = val;
        bb.s_mask = high_mask;
        bb.positive = positive;
        const std::uint64_t steps = std::uint64_t{1} << low;
        for (std::uint64_t s = 1; s < steps; ++s) {
            const int flip = std::countr_zero(s);
            const double sign = in_s[flip] ? -1.0 : 1.0;
            in_s[flip] ^= 1;
            low_mask ^= std::uint64_t{1} << flip;
            const double* row = d.data() + static_cast<std::size_t>(flip) * n;
            for (int j = 0; j < n; ++j) colsum[j] += sign * row[j];
            val = best_value_for_colsums(colsum, &positive);
            if (val > bb.value) {
                bb.value = val;
                bb.s_mask = high_mask | low_mask;
                bb.positive = positive;
            }
        }
        best[b] = bb;
    }

    BlockBest overall;
    for (const BlockBest& bb : best)
        if (bb.value > overall.value) overall = bb;

    // Rebuild the witness T from the winning S.
    std::vector<double> colsum(n, 0.0);
    for (int i = 0; i < n; ++i)
        if ((overall.s_mask >> i) & 1u)
            for (int j = 0; j < n; ++j) colsum[j] += d[static_cast<std::size_t>(i) * n + j];

    CutResult res;
    res.value = overall.value / (static_cast<double>(n) * n);
    res.s = members_of_mask(overall.s_mask, n);
    res.t = t_witness(colsum, overall.positive);
    res.exact = true;
    return res;
}

namespace serial {

CutResult cut_distance_exact(const WeightedGraph& r1, const WeightedGraph& r2) {
    require_same_size(r1.n(), r2.n());
    const int n = r1.n();
    if (n > kCutExactMaxN) throw std::invalid_argument("cut_distance_exact: n exceeds exact-mode cap");
    const std::vector<double> d = deviation_matrix(r1, r2);

    double best_val = -1.0;
    std::uint64_t best_s = 0;
    bool best_positive = true;
    std::vector<double> colsum(n);
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::fill(colsum.begin(), colsum.end(), 0.0);
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1u)
                for (int j = 0; j < n; ++j) colsum[j] += d[static_cast<std::size_t>(i) * n + j];
        bool positive = true;
        const double val = best_value_for_colsums(colsum, &positive);
        if (val > best_val) {
            best_val = val;
            best_s = mask;
            best_positive = positive;
        }
    }

    std::fill(colsum.begin(), colsum.end(), 0.0);
    for (int i = 0; i < n; ++i)
        if ((best_s >> i) & 1u)
            for (int j = 0; j < n; ++j) colsum[j] += d[static_cast<std::size_t>(i) * n + j];

    CutResult res;
    res.value = best_val / (static_cast<double>(n) * n);
    res.s = members_of_mask(best_s, n);
    res.t = t_witness(colsum, best_positive);
    res.exact = true;
    return res;
}

}  // namespace serial

CutBound cut_distance_heuristic(const WeightedGraph& r1, const WeightedGraph& r2) {
    require_same_size(r1.n(), r2.n());
    const int n = r1.n();
    const std::vector<double> d = deviation_matrix(r1, r2);

    auto value_of_subset = [&](const std::vector<char>& in_s, std::vector<double>& colsum, bool* positive) {
        std::fill(colsum.begin(), colsum.end(), 0.0);
        for (int i = 0; i < n; ++i)
            if (in_s[i])
                for (int j = 0; j < n; ++j) colsum[j] += d[static_cast<std::size_t>(i) * n + j];
        return best_value_for_colsums(colsum, positive);
    };

    // Power iteration on the (symmetric) deviation matrix, fixed seed.
    std::mt19937_64 gen(0x5eedcafeULL);
    std::vector<double> x(n), y(n);
    for (int i = 0; i < n; ++i) x[i] = (gen() & 1u) ? 1.0 : -1.0;
    for (int it = 0; it < 50; ++it) {
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            const double* row = d.data() + static_cast<std::size_t>(i) * n;
            for (int j = 0; j < n; ++j) acc += row[j] * x[j];
            y[i] = acc;
        }
        double norm = 0.0;
        for (double v : y) norm += v * v;
        norm = std::sqrt(norm);
        if (norm == 0.0) break;
        for (int i = 0; i < n; ++i) x[i] = y[i] / norm;
    }

    std::vector<std::vector<char>> candidates;
    std::vector<char> pos_side(n), neg_side(n);
    for (int i = 0; i < n; ++i) {
        pos_side[i] = x[i] >= 0.0;
        neg_side[i] = x[i] < 0.0;
    }
    candidates.push_back(pos_side);
    candidates.push_back(neg_side);
    candidates.push_back(std::vector<char>(n, 1));  // S = V

    std::vector<double> colsum(n);
    std::vector<char> best_s;
    double best_val = -1.0;
    bool best_positive = true;
    for (auto& cand : candidates) {
        bool positive = true;
        const double val = value_of_subset(cand, colsum, &positive);
        if (val > best_val) {
            best_val = val;
            best_s = cand;
            best_positive = positive;
        }
    }

    // One local-swap improvement pass over vertices in label order.
    bool positive = true;
    best_val = value_of_subset(best_s, colsum, &positive);
    best_positive = positive;
    for (int i = 0; i < n; ++i) {
        const double sign = best_s[i] ? -1.0 : 1.0;
        const double* row = d.data() + static_cast<std::size_t>(i) * n;
        for (int j = 0; j < n; ++j) colsum[j] += sign * row[j];
        const double val = best_value_for_colsums(colsum, &positive);
        if (val > best_val) {
            best_val = val;
            best_s[i] ^= 1;
            best_positive = positive;
        } else {
            for (int j = 0; j < n; ++j) colsum[j] -= sign * row[j];
        }
    }

    value_of_subset(best_s, colsum, &positive);
    CutBound out;
    out.lower = best_val / (static_cast<double>(n) * n);
    out.upper = l1_distance(r1, r2);
    for (int i = 0; i < n; ++i)
        if (best_s[i]) out.s.push_back(i);
    out.t = t_witness(colsum, best_positive);
    return out;
}

}  // namespace forb
