#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "treecode/code.hpp"
#include "treecode/graph.hpp"
#include "treecode/prufer.hpp"
#include "treecode/rng.hpp"

namespace treecode {

inline constexpr int kForestCountCap = 8;
inline constexpr int kRootedForestCap = 7;
inline constexpr int kTreesContainingCap = 7;
inline constexpr int kExactACap = 7;

namespace detail {

inline std::vector<Edge> all_edges(int n) {
    std::vector<Edge> edges;
    edges.reserve(pair_count(n));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back(Edge{u, v});
    return edges;
}

// visits every k-subset of [0,count) as an index vector
template <typename Visitor>
void for_each_subset(int count, int k, Visitor&& visit) {
    if (k > count) return;
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        visit(pick);
        int pos = k - 1;
        while (pos >= 0 && pick[pos] == count - k + pos) --pos;
        if (pos < 0) break;
        ++pick[pos];
        for (int i = pos + 1; i < k; ++i) pick[i] = pick[i - 1] + 1;
    }
}

}  // namespace detail

// |F(n,d)|: forests on n labelled nodes with exactly d components, counted by
// enumerating all (n-d)-subsets of E(K_n) and keeping the acyclic ones.
inline long long count_forests(int n, int d) {
    if (n < 1 || d < 1 || d > n) fail(ErrorKind::parameter, "need 1 <= d <= n");
    if (n > kForestCountCap)
        fail(ErrorKind::resource, "forest enumeration capped at n=" + std::to_string(kForestCountCap));
    const std::vector<Edge> edges = detail::all_edges(n);
    const int k = n - d;
    long long count = 0;
    detail::for_each_subset(static_cast<int>(edges.size()), k, [&](const std::vector<int>& pick) {
        UnionFind uf(n);
        for (int idx : pick)
            if (!uf.unite(edges[idx].u, edges[idx].v)) return;
        ++count;
    });
    return count;
}

// Forests with |roots| components, each containing exactly one root.
inline long long count_rooted_forests(int n, const std::vector<int>& roots) {
    if (roots.empty()) fail(ErrorKind::parameter, "root set must be nonempty");
    if (n > kRootedForestCap)
        fail(ErrorKind::resource, "rooted forest enumeration capped at n=" + std::to_string(kRootedForestCap));
    std::vector<bool> is_root(n, false);
    for (int r : roots) {
        if (r < 0 || r >= n) fail(ErrorKind::parameter, "root out of range");
        if (is_root[r]) fail(ErrorKind::parameter, "duplicate root");
        is_root[r] = true;
    }
    const std::vector<Edge> edges = detail::all_edges(n);
    const int k = n - static_cast<int>(roots.size());
    long long count = 0;
    detail::for_each_subset(static_cast<int>(edges.size()), k, [&](const std::vector<int>& pick) {
        UnionFind uf(n);
        for (int idx : pick)
            if (!uf.unite(edges[idx].u, edges[idx].v)) return;
        // every component must hold exactly one root; with n-|roots| edges and
        // |roots| components it is enough that no two roots share a component
        std::vector<signed char> root_seen(n, 0);
        for (int r = 0; r < n; ++r)
            if (is_root[r]) {
                int rep = uf.find(r);
                if (root_seen[rep]) return;
                root_seen[rep] = 1;
            }
        ++count;
    });
    return count;
}

// Number of spanning trees whose edge set contains the given forest, by a
// scan over all n^(n-2) trees.
inline long long count_trees_containing(const Forest& f) {
    if (f.n() > kTreesContainingCap)
        fail(ErrorKind::resource, "tree scan capped at n=" + std::to_string(kTreesContainingCap));
    const EdgeBits target(f.edge_set());
    long long count = 0;
    for_each_spanning_tree(f.n(), [&](const LabeledTree& t) {
        if (EdgeBits(t.edge_set()).contains_all(target)) ++count;
    });
    return count;
}

// Batch version reusing one pass over the tree masks for many forests.
inline std::vector<long long> count_trees_containing_batch(int n, const std::vector<Forest>& forests) {
    if (n > kTreesContainingCap)
        fail(ErrorKind::resource, "tree scan capped at n=" + std::to_string(kTreesContainingCap));
    std::vector<EdgeBits> targets;
    targets.reserve(forests.size());
    for (const Forest& f : forests) {
        if (f.n() != n) fail(ErrorKind::dimension, "forest n differs from batch n");
        targets.emplace_back(f.edge_set());
    }
    std::vector<long long> counts(forests.size(), 0);
    for_each_spanning_tree(n, [&](const LabeledTree& t) {
        EdgeBits mask(t.edge_set());
        for (std::size_t i = 0; i < targets.size(); ++i)
            if (mask.contains_all(targets[i])) ++counts[i];
    });
    return counts;
}

struct SearchBudget {
    std::uint64_t max_nodes = 50'000'000;  // branch-and-bound expansions, not wall time
};

struct ExactAResult {
    long long value = 0;   // best independent set found; a valid lower bound always
    bool certified = false;  // true iff the search ran to completion within budget
    std::uint64_t nodes_expanded = 0;
};

namespace detail {

// flat concatenated bitset rows
struct AdjacencyMatrix {
    int count = 0;
    int words_per_row = 0;
    std::vector<std::uint64_t> rows;

    void set(int i, int j) {
        rows[static_cast<std::size_t>(i) * words_per_row + (j >> 6)] |= std::uint64_t{1} << (j & 63);
    }
    const std::uint64_t* row(int i) const { return rows.data() + static_cast<std::size_t>(i) * words_per_row; }
};

class MaxIndependentSet {
  public:
    MaxIndependentSet(const AdjacencyMatrix& adj, std::uint64_t max_nodes)
        : adj_(adj), words_(adj.words_per_row), budget_(max_nodes) {}

    ExactAResult run(long long greedy_start) {
        best_ = greedy_start;
        std::vector<std::uint64_t> all(words_, 0);
        for (int v = 0; v < adj_.count; ++v) all[v >> 6] |= std::uint64_t{1} << (v & 63);
        bool completed = expand(all, 0);
        return ExactAResult{best_, completed, nodes_};
    }

  private:
    // greedy clique cover of the candidate set: at most one vertex per clique
    // can join an independent set
    int cover_bound(const std::vector<std::uint64_t>& candidates) {
        std::vector<std::uint64_t> rest = candidates;
        std::vector<std::uint64_t> clique(words_);
        int cliques = 0;
        while (true) {
            int v = first_bit(rest);
            if (v < 0) break;
            ++cliques;
            // grow a clique around v inside rest
            for (int w = 0; w < words_; ++w) clique[w] = rest[w] & adj_.row(v)[w];
            clear_bit(rest, v);
            int u = first_bit(clique);
            while (u >= 0) {
                clear_bit(rest, u);
                for (int w = 0; w < words_; ++w) clique[w] &= adj_.row(u)[w];
                clear_bit(clique, u);
                u = first_bit(clique);
            }
        }
        return cliques;
    }

    bool expand(std::vector<std::uint64_t>& candidates, long long size) {
        if (++nodes_ > budget_) return false;
        int v = first_bit(candidates);
        if (v < 0) {
            best_ = std::max(best_, size);
            return true;
        }
        if (size + cover_bound(candidates) <= best_) return true;  // prune

        // degree of v inside the candidate set decides whether the exclude
        // branch can ever beat the include branch
        int deg = 0;
        for (int w = 0; w < words_; ++w) deg += std::popcount(candidates[w] & adj_.row(v)[w]);

        std::vector<std::uint64_t> with_v(words_);
        for (int w = 0; w < words_; ++w) with_v[w] = candidates[w] & ~adj_.row(v)[w];
        clear_bit(with_v, v);
        if (!expand(with_v, size + 1)) return false;

        if (deg >= 2) {  // some optimal solution always keeps v when deg <= 1
            clear_bit(candidates, v);
            if (!expand(candidates, size)) return false;
        }
        return true;
    }

    static void clear_bit(std::vector<std::uint64_t>& bits, int v) {
        bits[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    int first_bit(const std::vector<std::uint64_t>& bits) const {
        for (int w = 0; w < words_; ++w)
            if (bits[w]) return (w << 6) + std::countr_zero(bits[w]);
        return -1;
    }

    const AdjacencyMatrix& adj_;
    int words_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    long long best_ = 0;
};

}  // namespace detail

// Conflict graph on all n^(n-2) spanning trees: vertices indexed by Pruefer
// rank, edges between trees sharing at least n-d common edges. Independent
// sets are exactly the (n,d) tree-codes.
struct ConflictGraph {
    int n = 0;
    int d = 0;
    std::vector<EdgeBits> tree_bits;    // by Pruefer rank
    detail::AdjacencyMatrix adjacency;
    std::vector<int> degree;

    static ConflictGraph build(int n, int d) {
        if (n < 2 || d < 1 || d > n - 1) fail(ErrorKind::parameter, "need 2 <= n and 1 <= d <= n-1");
        if (n > kExactACap)
            fail(ErrorKind::resource, "conflict graph capped at n=" + std::to_string(kExactACap));
        ConflictGraph g;
        g.n = n;
        g.d = d;
        for_each_spanning_tree(n, [&](const LabeledTree& t) { g.tree_bits.emplace_back(t.edge_set()); });
        const int count = static_cast<int>(g.tree_bits.size());
        g.adjacency.count = count;
        g.adjacency.words_per_row = (count + 63) / 64;
        g.adjacency.rows.assign(static_cast<std::size_t>(count) * g.adjacency.words_per_row, 0);
        g.degree.assign(count, 0);
        const int threshold = n - d;
        for (int i = 0; i < count; ++i)
            for (int j = i + 1; j < count; ++j)
                if (g.tree_bits[i].intersect_count(g.tree_bits[j]) >= threshold) {
                    g.adjacency.set(i, j);
                    g.adjacency.set(j, i);
                    ++g.degree[i];
                    ++g.degree[j];
                }
        return g;
    }
};

// Exact A(n,d) by branch and bound over the conflict graph. Vertices are
// explored in conflict-degree order (ties by Pruefer rank); the initial
// solution comes from a greedy scan in that order. Single-threaded and
// deterministic; the budget counts node expansions.
inline ExactAResult exact_A(int n, int d, SearchBudget budget = {}) {
    const ConflictGraph graph = ConflictGraph::build(n, d);
    const int count = graph.adjacency.count;

    std::vector<int> order(count);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return graph.degree[a] > graph.degree[b]; });

    detail::AdjacencyMatrix permuted;
    permuted.count = count;
    permuted.words_per_row = graph.adjacency.words_per_row;
    permuted.rows.assign(static_cast<std::size_t>(count) * permuted.words_per_row, 0);
    std::vector<int> place(count);
    for (int pos = 0; pos < count; ++pos) place[order[pos]] = pos;
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j)
            if (graph.tree_bits[i].intersect_count(graph.tree_bits[j]) >= graph.n - graph.d) {
                permuted.set(place[i], place[j]);
                permuted.set(place[j], place[i]);
            }

    // greedy initial independent set in the permuted order
    long long greedy = 0;
    {
        std::vector<std::uint64_t> blocked(permuted.words_per_row, 0);
        for (int v = 0; v < count; ++v) {
            if (blocked[v >> 6] >> (v & 63) & 1) continue;
            ++greedy;
            for (int w = 0; w < permuted.words_per_row; ++w) blocked[w] |= permuted.row(v)[w];
        }
    }

    detail::MaxIndependentSet solver(permuted, budget.max_nodes);
    return solver.run(greedy);
}

// Maximal (not maximum) code grown by a greedy scan over all trees in a
// seeded-random order. The output always verifies at distance d.
inline TreeCode greedy_code(int n, int d, std::uint64_t seed, int cap = kDefaultEnumerationCap) {
    if (d < 1 || d > n - 1) fail(ErrorKind::parameter, "need 1 <= d <= n-1");
    std::vector<LabeledTree> trees = enumerate_spanning_trees(n, cap);
    std::vector<std::size_t> order(trees.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    SplitMix64 rng(seed);
    deterministic_shuffle(order, rng);

    TreeCode code{n, {}, d, "greedy"};
    std::vector<EdgeBits> chosen;
    const int max_shared = n - 1 - d;
    for (std::size_t idx : order) {
        EdgeBits bits(trees[idx].edge_set());
        bool ok = true;
        for (const EdgeBits& c : chosen)
            if (bits.intersect_count(c) > max_shared) {
                ok = false;
                break;
            }
        if (ok) {
            chosen.push_back(std::move(bits));
            code.codewords.push_back(trees[idx]);
        }
    }
    return code;
}

}  // namespace treecode
