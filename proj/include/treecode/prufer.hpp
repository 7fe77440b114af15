#pragma once

#include <cstdint>
#include <vector>

#include "treecode/graph.hpp"

namespace treecode {

inline constexpr int kDefaultEnumerationCap = 8;

// Length-(n-2) sequence over [0,n); in bijection with spanning trees of K_n.
struct PrueferSequence {
    int n = 2;
    std::vector<NodeId> symbols;

    PrueferSequence(int n_, std::vector<NodeId> symbols_) : n(n_), symbols(std::move(symbols_)) {
        if (n < 2) fail(ErrorKind::parameter, "Pruefer sequences need n >= 2");
        if (static_cast<int>(symbols.size()) != n - 2)
            fail(ErrorKind::structure, "Pruefer sequence must have exactly n-2 symbols");
        for (NodeId s : symbols)
            if (s < 0 || s >= n) fail(ErrorKind::structure, "Pruefer symbol out of range");
    }

    friend bool operator==(const PrueferSequence&, const PrueferSequence&) = default;
};

// Smallest-leaf-first decoding. Single pass with the moving-pointer trick.
inline LabeledTree prufer_decode(const PrueferSequence& seq) {
    const int n = seq.n;
    std::vector<int> degree(n, 1);
    for (NodeId s : seq.symbols) ++degree[s];

    std::vector<Edge> edges;
    edges.reserve(n - 1);
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (NodeId s : seq.symbols) {
        edges.push_back(make_edge(leaf, s));
        if (--degree[s] == 1 && s < ptr) {
            leaf = s;  // new leaf below the scan pointer: use it immediately
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.push_back(make_edge(leaf, n - 1));
    return LabeledTree(n, EdgeSet(n, std::move(edges)));
}

// Inverse of prufer_decode: repeatedly strip the smallest leaf.
inline PrueferSequence prufer_encode(const LabeledTree& tree) {
    const int n = tree.n();
    std::vector<int> degree = tree.degrees();
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : tree.edges()) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }

    std::vector<NodeId> symbols;
    symbols.reserve(n - 2);
    std::vector<bool> removed(n, false);
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int step = 0; step < n - 2; ++step) {
        int neighbor = -1;
        for (int w : adj[leaf])
            if (!removed[w]) {
                neighbor = w;
                break;
            }
        symbols.push_back(neighbor);
        removed[leaf] = true;
        if (--degree[neighbor] == 1 && neighbor < ptr) {
            leaf = neighbor;
        } else {
            ++ptr;
            while (degree[ptr] != 1 || removed[ptr]) ++ptr;
            leaf = ptr;
        }
    }
    return PrueferSequence(n, std::move(symbols));
}

inline std::uint64_t cayley_count(int n) {
    if (n == 1) return 1;
    std::uint64_t total = 1;
    for (int i = 0; i < n - 2; ++i) total *= static_cast<std::uint64_t>(n);
    return total;
}

// Visits all n^(n-2) spanning trees in Pruefer-lexicographic order.
template <typename Visitor>
void for_each_spanning_tree(int n, Visitor&& visit, int cap = kDefaultEnumerationCap) {
    if (n < 2) fail(ErrorKind::parameter, "enumeration needs n >= 2");
    if (n > cap)
        fail(ErrorKind::resource,
             "n=" + std::to_string(n) + " above enumeration cap " + std::to_string(cap) + "; raise the cap to force");
    std::vector<NodeId> symbols(n - 2, 0);
    while (true) {
        visit(prufer_decode(PrueferSequence(n, symbols)));
        int pos = n - 3;
        while (pos >= 0 && symbols[pos] == n - 1) symbols[pos--] = 0;
        if (pos < 0) break;
        ++symbols[pos];
    }
}

inline std::vector<LabeledTree> enumerate_spanning_trees(int n, int cap = kDefaultEnumerationCap) {
    std::vector<LabeledTree> trees;
    trees.reserve(cayley_count(n));
    for_each_spanning_tree(n, [&](const LabeledTree& t) { trees.push_back(t); }, cap);
    return trees;
}

}  // namespace treecode
