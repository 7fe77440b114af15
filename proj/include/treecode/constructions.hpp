#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "treecode/code.hpp"
#include "treecode/field.hpp"
#include "treecode/graph.hpp"
#include "treecode/tables.hpp"

namespace treecode {

// All n spanning stars; any two share exactly the edge between their centers.
inline TreeCode stars(int n) {
    if (n < 3) fail(ErrorKind::parameter, "stars need n >= 3");
    TreeCode code{n, {}, n - 2, "stars"};
    for (int c = 0; c < n; ++c) {
        std::vector<Edge> edges;
        for (int v = 0; v < n; ++v)
            if (v != c) edges.push_back(make_edge(c, v));
        code.codewords.emplace_back(n, EdgeSet(n, std::move(edges)));
    }
    return code;
}

namespace detail {

inline LabeledTree path_tree(int n, const std::vector<int>& order) {
    std::vector<Edge> edges;
    edges.reserve(order.size() - 1);
    for (std::size_t i = 0; i + 1 < order.size(); ++i) edges.push_back(make_edge(order[i], order[i + 1]));
    return LabeledTree(n, EdgeSet(n, std::move(edges)));
}

// k, k+1, k-1, k+2, k-2, ... over Z_m
inline std::vector<int> zigzag(int m, int k) {
    std::vector<int> order{k};
    for (int t = 1; 2 * t <= m; ++t) {
        order.push_back((k + t) % m);
        if (2 * t + 1 <= m) order.push_back(((k - t) % m + m) % m);
    }
    return order;
}

}  // namespace detail

// floor(n/2) pairwise edge-disjoint Hamiltonian paths. Even n: rotated zigzag
// paths. Odd n: zigzag cycles through an extra hub vertex, one edge dropped
// per cycle. Disjointness is enforced by tests, not trusted from the formula.
inline TreeCode hamiltonian_paths(int n) {
    if (n < 4) fail(ErrorKind::parameter, "hamiltonian path decomposition needs n >= 4");
    TreeCode code{n, {}, n - 1, "ham-paths"};
    if (n % 2 == 0) {
        for (int k = 0; k < n / 2; ++k) code.codewords.push_back(detail::path_tree(n, detail::zigzag(n, k)));
    } else {
        const int hub = n - 1;
        for (int k = 0; k < n / 2; ++k) {
            std::vector<int> order{hub};
            for (int v : detail::zigzag(n - 1, k)) order.push_back(v);
            code.codewords.push_back(detail::path_tree(n, order));
        }
    }
    return code;
}

// Paths plus stars; a path and a star share at most two edges.
inline TreeCode paths_and_stars(int n) {
    if (n < 5) fail(ErrorKind::parameter, "paths_and_stars needs n >= 5");
    TreeCode code{n, {}, n - 3, "paths-stars"};
    for (LabeledTree& t : hamiltonian_paths(n).codewords) code.codewords.push_back(std::move(t));
    for (LabeledTree& t : stars(n).codewords) code.codewords.push_back(std::move(t));
    return code;
}

inline std::vector<std::string> triple_path_vertex_labels(int p) {
    std::vector<std::string> labels;
    for (int i = 1; i <= 3; ++i)
        for (int j = 0; j < p; ++j) labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
    return labels;
}

// Hamiltonian paths (1,j)-(2,aj+b)-(3,bj+a), j = 0..p-1, one per pair
// (a,b) of nonzero residues with a+b != 0 and a-b != 0. Vertex (i,j) is node
// (i-1)p + j. Yields (p-1)(p-3) paths on n=3p nodes at claimed distance n-4.
inline TreeCode affine_triple_paths(int p) {
    if (p < 5 || !is_prime(p)) fail(ErrorKind::parameter, "construction needs a prime p >= 5");
    const int n = 3 * p;
    TreeCode code{n, {}, n - 4, "affine-n4"};
    auto node = [p](int layer, int j) { return (layer - 1) * p + j; };
    for (int a = 1; a < p; ++a)
        for (int b = 1; b < p; ++b) {
            if ((a + b) % p == 0 || (a - b + p) % p == 0) continue;
            std::vector<int> order;
            order.reserve(n);
            for (int j = 0; j < p; ++j) {
                order.push_back(node(1, j));
                order.push_back(node(2, (a * j + b) % p));
                order.push_back(node(3, (b * j + a) % p));
            }
            code.codewords.push_back(detail::path_tree(n, order));
        }
    return code;
}

inline std::vector<std::string> cubic_tree_vertex_labels(const Field& field) {
    std::vector<std::string> labels;
    for (int i = 1; i <= 2; ++i)
        for (int x = 0; x < field.q(); ++x)
            labels.push_back("(" + std::to_string(i) + "," + std::to_string(x) + ")");
    return labels;
}

// Spanning trees built from the cubic permutation polynomials
// f(x) = a x^3 - b x + c over GF(3^m): a stem path alternating (1, w^t) and
// (2, f(w^t)) for t = 0..q-2 plus the branch (1,a)-(1,0)-(2,c). dlog(a) runs
// over the even residues, dlog(b) over the odd ones, so b/a is never a square
// and f is a bijection. Vertex (i,x) is node (i-1)q + repr(x). Yields
// q((q-1)/2)^2 trees on n=2q nodes at claimed distance n-13.
inline TreeCode cubic_pp_trees(const Field& field) {
    if (field.p() != 3 || field.m() < 2)
        fail(ErrorKind::parameter, "construction needs GF(3^m) with m >= 2, got " + field.to_string());
    const int q = field.q();
    const int n = 2 * q;
    TreeCode code{n, {}, n - 13, "cubic-n13"};
    auto node = [q](int layer, int repr) { return (layer - 1) * q + repr; };

    std::vector<FieldElement> stem_x;  // w^0, w^1, ..., w^(q-2)
    for (int t = 0; t < q - 1; ++t) stem_x.push_back(field.omega().pow(t));

    for (int i = 2; i <= q - 1; i += 2) {
        const FieldElement a = field.omega().pow(i);
        for (int j = 1; j <= q - 2; j += 2) {
            const FieldElement b = field.omega().pow(j);
            for (int c_repr = 0; c_repr < q; ++c_repr) {
                const FieldElement c = field.element(c_repr);
                std::vector<Edge> edges;
                edges.reserve(n - 1);
                auto f = [&](const FieldElement& x) { return a * x.pow(3) - b * x + c; };
                for (int t = 0; t < q - 1; ++t) {
                    edges.push_back(make_edge(node(1, stem_x[t].repr()), node(2, f(stem_x[t]).repr())));
                    if (t + 1 < q - 1)
                        edges.push_back(make_edge(node(2, f(stem_x[t]).repr()), node(1, stem_x[t + 1].repr())));
                }
                edges.push_back(make_edge(node(1, 0), node(1, a.repr())));
                edges.push_back(make_edge(node(1, 0), node(2, c.repr())));
                code.codewords.emplace_back(n, EdgeSet(n, std::move(edges)));
            }
        }
    }
    return code;
}

// The 28 two-center stars S_{i,j} over 8 nodes: centers i,j joined, i carrying
// the leaves N[i][j] and j the leaves N[j][i].
inline TreeCode bibd_two_star_code(const BlockTable& table) {
    validate_block_table(table);
    TreeCode code{8, {}, 5, "bibd-8-28-5"};
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) {
            std::vector<Edge> edges{make_edge(i, j)};
            for (int x : table.at(i, j)) edges.push_back(make_edge(i, x));
            for (int y : table.at(j, i)) edges.push_back(make_edge(j, y));
            code.codewords.emplace_back(8, EdgeSet(8, std::move(edges)));
        }
    return code;
}

inline TreeCode bibd_two_star_code() { return bibd_two_star_code(two_center_star_blocks()); }

// Bijection on the C(n,2) unordered pairs; unlisted pairs stay fixed.
// Relabeling edges this way preserves every pairwise intersection size.
class EdgePermutation {
  public:
    explicit EdgePermutation(int n) : n_(n), image_(pair_count(n)) {
        std::iota(image_.begin(), image_.end(), 0);
    }

    int n() const { return n_; }

    // e1 -> e2 -> ... -> ek -> e1; factors must have disjoint supports
    void add_cycle(const std::vector<Edge>& cycle) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            int from = edge_index(n_, cycle[i]);
            int to = edge_index(n_, cycle[(i + 1) % cycle.size()]);
            if (image_[from] != from)
                fail(ErrorKind::structure, "edge permutation factors must have disjoint supports");
            image_[from] = to;
        }
        check_bijective();
    }

    void add_swap(const Edge& a, const Edge& b) { add_cycle({a, b}); }

    Edge apply(const Edge& e) const {
        int idx = image_[edge_index(n_, e)];
        // invert edge_index: find u by walking the row offsets
        int u = 0, row = n_ - 1;
        while (idx >= row) {
            idx -= row;
            --row;
            ++u;
        }
        return Edge{u, u + 1 + idx};
    }

    EdgeSet apply(const EdgeSet& s) const {
        if (s.n() != n_) fail(ErrorKind::dimension, "edge set n differs from permutation n");
        std::vector<Edge> mapped;
        mapped.reserve(s.size());
        for (const Edge& e : s.edges()) mapped.push_back(apply(e));
        return EdgeSet(n_, std::move(mapped));
    }

    const std::vector<int>& image() const { return image_; }

  private:
    void check_bijective() const {
        std::vector<bool> hit(image_.size(), false);
        for (int to : image_) {
            if (hit[to]) fail(ErrorKind::structure, "edge permutation is not a bijection");
            hit[to] = true;
        }
    }

    int n_;
    std::vector<int> image_;
};

// The hand-found permutation of E(K_11): a 10-cycle, two 3-cycles and four
// transpositions, applied to the affine graph family below.
inline EdgePermutation sigma_11() {
    EdgePermutation sigma(11);
    sigma.add_cycle({make_edge(2, 3), make_edge(0, 9), make_edge(2, 8), make_edge(0, 8), make_edge(3, 6),
                     make_edge(2, 4), make_edge(1, 8), make_edge(7, 8), make_edge(0, 6), make_edge(0, 1)});
    sigma.add_cycle({make_edge(4, 6), make_edge(1, 10), make_edge(8, 10)});
    sigma.add_cycle({make_edge(4, 9), make_edge(6, 10), make_edge(5, 10)});
    sigma.add_swap(make_edge(0, 10), make_edge(4, 8));
    sigma.add_swap(make_edge(1, 5), make_edge(2, 9));
    sigma.add_swap(make_edge(3, 8), make_edge(4, 5));
    sigma.add_swap(make_edge(0, 2), make_edge(0, 3));
    return sigma;
}

struct AffineGraph {
    int a = 0;
    int b = 0;
    EdgeSet edges;
};

struct AffineGraphFamily {
    int p = 0;
    std::vector<AffineGraph> graphs;
};

// Representatives of the inverse pairs {w, w^-1}, w in Z_p \ {0,1,-1},
// choosing min(w, w^-1) from each pair.
inline std::vector<int> inverse_pair_representatives(int p) {
    std::vector<int> reps;
    for (int w = 2; w <= p - 2; ++w) {
        int winv = 0;
        for (int c = 1; c < p; ++c)
            if (c * w % p == 1) {
                winv = c;
                break;
            }
        if (w <= winv) reps.push_back(w);
    }
    return reps;
}

// The (p^2-2p-1)/2 affine graphs over Z_p: G_{a,b} = {{x, bx+a}} for b among
// the inverse-pair representatives with any a, plus the shifted paths
// G_{a,1} = {{x, x+a}: x != p-1} for a = 1..(p-1)/2. Every member has exactly
// p-1 edges; two members share at most two edges.
inline AffineGraphFamily furedi_family(int p) {
    if (p < 5 || !is_prime(p)) fail(ErrorKind::parameter, "family needs a prime p >= 5");
    AffineGraphFamily family{p, {}};
    for (int b : inverse_pair_representatives(p))
        for (int a = 0; a < p; ++a) {
            std::vector<Edge> edges;
            for (int x = 0; x < p; ++x) {
                int y = (b * x + a) % p;
                if (y != x) edges.push_back(make_edge(x, y));
            }
            family.graphs.push_back({a, b, EdgeSet(p, std::move(edges))});
        }
    for (int a = 1; a <= (p - 1) / 2; ++a) {
        std::vector<Edge> edges;
        for (int x = 0; x <= p - 2; ++x) edges.push_back(make_edge(x, (x + a) % p));
        family.graphs.push_back({a, 1, EdgeSet(p, std::move(edges))});
    }
    for (const AffineGraph& g : family.graphs)
        if (static_cast<int>(g.edges.size()) != p - 1)
            fail(ErrorKind::structure, "affine family member does not have p-1 edges");
    return family;
}

// The 35 embedded trees over 11 nodes, validated against their content hash.
inline TreeCode code_11_35_8(const std::vector<AffineTreeRow>& rows) {
    validate_affine_tree_rows(rows);
    TreeCode code{11, {}, 8, "furedi-11-35-8"};
    for (const AffineTreeRow& row : rows) {
        std::vector<std::pair<int, int>> pairs;
        for (const auto& e : row.edges) pairs.emplace_back(e[0], e[1]);
        code.codewords.push_back(LabeledTree::from_pairs(11, pairs));
    }
    return code;
}

inline TreeCode code_11_35_8() { return code_11_35_8(affine_tree_rows()); }

struct FurediCrossCheck {
    int family_size = 0;
    int sigma_tree_count = 0;                              // permuted graphs that came out as trees
    std::vector<std::pair<int, int>> derived_tree_params;  // their (a,b)
    bool edge_sets_match = false;                          // derived trees == embedded rows, as sets
    std::vector<int> unmatched_rows;                       // 1-based embedded rows with no derived twin
    std::vector<std::pair<int, int>> unmatched_derived;
};

// Applies sigma_11 to the p=11 family and compares the resulting trees
// against the embedded rows. Both sides are validated independently; a
// mismatch is reported, never patched.
inline FurediCrossCheck furedi_sigma_cross_check() {
    const AffineGraphFamily family = furedi_family(11);
    const EdgePermutation sigma = sigma_11();

    FurediCrossCheck report;
    report.family_size = static_cast<int>(family.graphs.size());

    std::vector<EdgeSet> derived;
    for (const AffineGraph& g : family.graphs) {
        EdgeSet mapped = sigma.apply(g.edges);
        if (is_spanning_tree(11, mapped)) {
            ++report.sigma_tree_count;
            report.derived_tree_params.emplace_back(g.a, g.b);
            derived.push_back(std::move(mapped));
        }
    }

    const auto& rows = affine_tree_rows();
    std::vector<bool> derived_used(derived.size(), false);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::vector<std::pair<int, int>> pairs;
        for (const auto& e : rows[r].edges) pairs.emplace_back(e[0], e[1]);
        EdgeSet row_edges = EdgeSet::from_pairs(11, pairs);
        bool found = false;
        for (std::size_t k = 0; k < derived.size(); ++k)
            if (!derived_used[k] && derived[k] == row_edges) {
                derived_used[k] = true;
                found = true;
                break;
            }
        if (!found) report.unmatched_rows.push_back(static_cast<int>(r) + 1);
    }
    for (std::size_t k = 0; k < derived.size(); ++k)
        if (!derived_used[k]) report.unmatched_derived.push_back(report.derived_tree_params[k]);
    report.edge_sets_match = report.unmatched_rows.empty() && report.unmatched_derived.empty() &&
                             derived.size() == rows.size();
    return report;
}

}  // namespace treecode
