#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "treecode/errors.hpp"

namespace treecode {

using NodeId = int;

// Unordered vertex pair stored as u < v.
struct Edge {
    NodeId u = 0;
    NodeId v = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(NodeId a, NodeId b) {
    if (a == b) fail(ErrorKind::structure, "self-loop {" + std::to_string(a) + "," + std::to_string(b) + "}");
    return a < b ? Edge{a, b} : Edge{b, a};
}

// Index of an edge in the lexicographic listing of all C(n,2) pairs.
inline int edge_index(int n, const Edge& e) {
    return e.u * n - e.u * (e.u + 1) / 2 + (e.v - e.u - 1);
}

inline int pair_count(int n) { return n * (n - 1) / 2; }

class UnionFind {
  public:
    explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // false if x and y were already connected (joining would close a cycle)
    bool unite(int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx == ry) return false;
        parent_[rx] = ry;
        return true;
    }

  private:
    std::vector<int> parent_;
};

// Sorted duplicate-free list of edges with endpoints in [0, n).
class EdgeSet {
  public:
    EdgeSet() = default;

    EdgeSet(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
        if (n_ < 1) fail(ErrorKind::parameter, "EdgeSet requires n >= 1");
        for (const Edge& e : edges_) {
            if (e.u < 0 || e.v <= e.u || e.v >= n_)
                fail(ErrorKind::structure, "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                               "} out of range for n=" + std::to_string(n_));
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            fail(ErrorKind::structure, "duplicate edge in edge set");
    }

    static EdgeSet from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
        std::vector<Edge> edges;
        edges.reserve(pairs.size());
        for (auto [a, b] : pairs) edges.push_back(make_edge(a, b));
        return EdgeSet(n, std::move(edges));
    }

    int n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t size() const { return edges_.size(); }
    bool contains(const Edge& e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

    bool is_acyclic() const {
        UnionFind uf(n_);
        for (const Edge& e : edges_)
            if (!uf.unite(e.u, e.v)) return false;
        return true;
    }

    friend bool operator==(const EdgeSet& a, const EdgeSet& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

  private:
    int n_ = 1;
    std::vector<Edge> edges_;
};

// |E1 ∩ E2| by merge over the sorted lists; the kernel everything else sits on.
inline int shared_edges(const EdgeSet& a, const EdgeSet& b) {
    if (a.n() != b.n())
        fail(ErrorKind::dimension, "edge sets on different vertex counts: " + std::to_string(a.n()) + " vs " +
                                       std::to_string(b.n()));
    const auto& ea = a.edges();
    const auto& eb = b.edges();
    std::size_t i = 0, j = 0;
    int common = 0;
    while (i < ea.size() && j < eb.size()) {
        if (ea[i] < eb[j])
            ++i;
        else if (eb[j] < ea[i])
            ++j;
        else {
            ++common;
            ++i;
            ++j;
        }
    }
    return common;
}

// Fixed-width bitset over the C(n,2) edge slots; used by the pairwise kernels.
class EdgeBits {
  public:
    EdgeBits() = default;
    EdgeBits(const EdgeSet& s) : n_(s.n()), words_((pair_count(s.n()) + 63) / 64, 0) {
        for (const Edge& e : s.edges()) {
            int idx = edge_index(n_, e);
            words_[idx >> 6] |= std::uint64_t{1} << (idx & 63);
        }
    }

    int intersect_count(const EdgeBits& other) const {
        int total = 0;
        for (std::size_t w = 0; w < words_.size(); ++w)
            total += std::popcount(words_[w] & other.words_[w]);
        return total;
    }

    bool contains_all(const EdgeBits& other) const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if ((words_[w] & other.words_[w]) != other.words_[w]) return false;
        return true;
    }

  private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

class Forest {
  public:
    Forest(int n, EdgeSet edges) : edges_(std::move(edges)) {
        if (edges_.n() != n) fail(ErrorKind::dimension, "edge set n differs from forest n");
        if (!edges_.is_acyclic()) fail(ErrorKind::structure, "forest contains a cycle");
    }
    static Forest from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
        return Forest(n, EdgeSet::from_pairs(n, pairs));
    }

    int n() const { return edges_.n(); }
    const EdgeSet& edge_set() const { return edges_; }
    int component_count() const { return n() - static_cast<int>(edges_.size()); }

  private:
    EdgeSet edges_;
};

inline bool is_spanning_tree(int n, const EdgeSet& edges) {
    if (edges.n() != n) return false;
    return static_cast<int>(edges.size()) == n - 1 && edges.is_acyclic();
}

class LabeledTree {
  public:
    LabeledTree(int n, EdgeSet edges) : edges_(std::move(edges)) {
        if (edges_.n() != n) fail(ErrorKind::dimension, "edge set n differs from tree n");
        if (!is_spanning_tree(n, edges_))
            fail(ErrorKind::structure,
                 "not a spanning tree: " + std::to_string(edges_.size()) + " edges on n=" + std::to_string(n));
    }
    static LabeledTree from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
        return LabeledTree(n, EdgeSet::from_pairs(n, pairs));
    }

    int n() const { return edges_.n(); }
    const EdgeSet& edge_set() const { return edges_; }
    const std::vector<Edge>& edges() const { return edges_.edges(); }

    std::vector<int> degrees() const {
        std::vector<int> deg(n(), 0);
        for (const Edge& e : edges()) {
            ++deg[e.u];
            ++deg[e.v];
        }
        return deg;
    }

    Forest as_forest() const { return Forest(n(), edges_); }

    friend bool operator==(const LabeledTree& a, const LabeledTree& b) { return a.edges_ == b.edges_; }

  private:
    EdgeSet edges_;
};

inline int shared_edges(const LabeledTree& a, const LabeledTree& b) {
    return shared_edges(a.edge_set(), b.edge_set());
}

// d(T1,T2) = n - 1 - |E1 ∩ E2|
inline int tree_distance(const LabeledTree& a, const LabeledTree& b) {
    return a.n() - 1 - shared_edges(a, b);
}

// Partition of [0,n) into connected components; components ordered by their
// smallest vertex, vertices ascending inside each.
inline std::vector<std::vector<int>> components(const Forest& f) {
    UnionFind uf(f.n());
    for (const Edge& e : f.edge_set().edges()) uf.unite(e.u, e.v);
    std::vector<int> root_slot(f.n(), -1);
    std::vector<std::vector<int>> comps;
    for (int v = 0; v < f.n(); ++v) {
        int r = uf.find(v);
        if (root_slot[r] < 0) {
            root_slot[r] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        comps[root_slot[r]].push_back(v);
    }
    return comps;
}

}  // namespace treecode
