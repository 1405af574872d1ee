#pragma once

#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "structctrl/pattern.hpp"
#include "structctrl/pattern_graph.hpp"

namespace structctrl {

/// Symmetric positive edge costs for the rotation pairs plus one cost per
/// translation entry. Solid costs are stored once per unordered pair and must
/// be positive; broken costs must be positive under the default (strict)
/// validation, with a permissive mode that admits zero.
template <class T>
class CostMatrix {
public:
    explicit CostMatrix(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("CostMatrix: n must be positive");
    }

    static CostMatrix uniform(int n) {
        CostMatrix c(n);
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) c.set_solid(i, j, T(1));
            c.set_broken(i, T(1));
        }
        return c;
    }

    [[nodiscard]] int n() const noexcept { return n_; }

    void set_solid(int i, int j, T cost) {
        if (i < 1 || j <= i || j > n_)
            throw std::invalid_argument("CostMatrix: solid pair must satisfy 1 <= i < j <= n");
        solid_[{i, j}] = std::move(cost);
    }

    void set_broken(int k, T cost) {
        if (k < 1 || k > n_)
            throw std::invalid_argument("CostMatrix: broken index must satisfy 1 <= k <= n");
        broken_[k] = std::move(cost);
    }

    [[nodiscard]] const T& solid(int i, int j) const {
        if (i > j) std::swap(i, j);
        auto it = solid_.find({i, j});
        if (it == solid_.end())
            throw std::invalid_argument("CostMatrix: missing cost for pair (" + std::to_string(i) +
                                        "," + std::to_string(j) + ")");
        return it->second;
    }

    [[nodiscard]] const T& broken(int k) const {
        auto it = broken_.find(k);
        if (it == broken_.end())
            throw std::invalid_argument("CostMatrix: missing cost for pair (" + std::to_string(k) +
                                        "," + std::to_string(n_ + 1) + ")");
        return it->second;
    }

    /// Completeness and positivity. Strict mode requires every broken cost
    /// positive as well; the permissive mode admits zero broken costs.
    void validate(bool allow_zero_broken = false) const {
        for (int i = 1; i <= n_; ++i)
            for (int j = i + 1; j <= n_; ++j)
                if (!(solid(i, j) > T(0)))
                    throw std::invalid_argument("CostMatrix: cost for pair (" + std::to_string(i) +
                                                "," + std::to_string(j) + ") must be positive");
        for (int k = 1; k <= n_; ++k) {
            const T& c = broken(k);
            const bool ok = allow_zero_broken ? !(c < T(0)) : c > T(0);
            if (!ok)
                throw std::invalid_argument("CostMatrix: cost for pair (" + std::to_string(k) + "," +
                                            std::to_string(n_ + 1) + ") must be " +
                                            (allow_zero_broken ? "non-negative" : "positive"));
        }
    }

private:
    int n_;
    std::map<IndexPair, T> solid_;
    std::map<int, T> broken_;
};

/// A sparsest controllable pattern: a spanning tree on {1..n} (the solid
/// part) plus exactly one translation entry. |pattern| = n.
struct TreePattern {
    Pattern pattern;
    std::set<IndexPair> solid_tree;
    int broken_vertex;
};

[[nodiscard]] TreePattern make_tree_pattern(int n, std::set<IndexPair> solid_tree, int broken_vertex);

/// One canonical minimal pattern: the path tree (1,2),...,(n-1,n) plus the
/// translation entry (1, n+1).
[[nodiscard]] TreePattern sparsest_pattern(int n);

/// Every spanning tree on the complete graph over {1..n}, each as a set of
/// canonical edges, in a deterministic (lexicographic) order. n^(n-2) trees.
[[nodiscard]] std::vector<std::set<IndexPair>> enumerate_spanning_trees(int n);

/// Every minimal structurally controllable pattern: each spanning tree
/// combined with each choice of translation entry. n^(n-1) patterns, all
/// distinct. Supported for 1 <= n <= 7.
[[nodiscard]] std::vector<TreePattern> enumerate_minimal(int n);

template <class T>
struct MinCostResult {
    TreePattern tree;
    T total_cost;
};

namespace detail {

/// Prim's algorithm on the complete graph over {1..n} with weights
/// w(i,j) = 2 c_ij; ties broken lexicographically on (weight, i, j).
template <class T>
std::set<IndexPair> prim_mst(const CostMatrix<T>& c) {
    const int n = c.n();
    std::set<IndexPair> tree;
    if (n == 1) return tree;

    using Entry = std::tuple<T, int, int>;  // (weight, i, j) with i < j
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
    std::vector<bool> in_tree(n + 1, false);

    auto push_edges = [&](int v) {
        for (int u = 1; u <= n; ++u) {
            if (u == v || in_tree[u]) continue;
            const int i = std::min(u, v), j = std::max(u, v);
            heap.emplace(c.solid(i, j) + c.solid(i, j), i, j);
        }
    };

    in_tree[1] = true;
    push_edges(1);
    int joined = 1;
    while (joined < n) {
        auto [w, i, j] = heap.top();
        heap.pop();
        if (in_tree[i] && in_tree[j]) continue;
        const int fresh = in_tree[i] ? j : i;
        in_tree[fresh] = true;
        tree.insert({i, j});
        ++joined;
        push_edges(fresh);
    }
    return tree;
}

}  // namespace detail

/// Minimum-cost structurally controllable pattern: a minimum spanning tree
/// on {1..n} under weights 2 c_ij, then the cheapest translation entry. The
/// objective value sums the stored (one-sided) costs of the chosen entries.
template <class T>
[[nodiscard]] MinCostResult<T> min_cost_pattern(const CostMatrix<T>& c,
                                                bool allow_zero_broken = false) {
    c.validate(allow_zero_broken);
    const int n = c.n();
    std::set<IndexPair> tree = detail::prim_mst(c);

    int best_k = 1;
    for (int k = 2; k <= n; ++k)
        if (c.broken(k) < c.broken(best_k)) best_k = k;

    T total = c.broken(best_k);
    for (const auto& [i, j] : tree) total += c.solid(i, j);
    return {make_tree_pattern(n, std::move(tree), best_k), std::move(total)};
}

/// Enumeration-based optimum over every minimal pattern; the oracle against
/// which min_cost_pattern is validated. Supported for 1 <= n <= 7.
template <class T>
[[nodiscard]] T brute_force_min_cost(const CostMatrix<T>& c, bool allow_zero_broken = false) {
    c.validate(allow_zero_broken);
    bool have = false;
    T best{};
    for (const TreePattern& tp : enumerate_minimal(c.n())) {
        T total = c.broken(tp.broken_vertex);
        for (const auto& [i, j] : tp.solid_tree) total += c.solid(i, j);
        if (!have || total < best) {
            best = std::move(total);
            have = true;
        }
    }
    return best;
}

}  // namespace structctrl
