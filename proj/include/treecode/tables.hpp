#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "treecode/graph.hpp"

namespace treecode {

inline std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string fnv1a64_hex(std::string_view bytes) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a64(bytes);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

// 8x8 table of 3-subsets of [0,8) (diagonal unused). Row i / column j entry
// N[i][j] lists the leaves hung on center i in the two-center star S_{i,j}.
// Shipped as checksummed static data; validation never repairs it.
struct BlockTable {
    static constexpr int order = 8;
    std::array<std::array<std::array<int, 3>, 8>, 8> blocks;

    const std::array<int, 3>& at(int i, int j) const { return blocks[i][j]; }
};

inline const BlockTable& two_center_star_blocks() {
    static const BlockTable table = [] {
        constexpr int raw[8][8][3] = {
            {{-1, -1, -1}, {3, 4, 6}, {1, 4, 5}, {2, 4, 7}, {5, 6, 7}, {1, 3, 7}, {2, 3, 5}, {1, 2, 6}},
            {{2, 5, 7}, {-1, -1, -1}, {3, 5, 6}, {0, 4, 5}, {0, 2, 6}, {4, 6, 7}, {0, 3, 7}, {2, 3, 4}},
            {{3, 6, 7}, {0, 4, 7}, {-1, -1, -1}, {1, 5, 7}, {0, 3, 5}, {0, 1, 6}, {1, 3, 4}, {4, 5, 6}},
            {{1, 5, 6}, {2, 6, 7}, {0, 4, 6}, {-1, -1, -1}, {0, 1, 7}, {1, 2, 4}, {4, 5, 7}, {0, 2, 5}},
            {{1, 2, 3}, {3, 5, 7}, {1, 6, 7}, {2, 5, 6}, {-1, -1, -1}, {0, 2, 7}, {0, 1, 5}, {0, 3, 6}},
            {{2, 4, 6}, {0, 2, 3}, {3, 4, 7}, {0, 6, 7}, {1, 3, 6}, {-1, -1, -1}, {1, 2, 7}, {0, 1, 4}},
            {{1, 4, 7}, {2, 4, 5}, {0, 5, 7}, {0, 1, 2}, {2, 3, 7}, {0, 3, 4}, {-1, -1, -1}, {1, 3, 5}},
            {{3, 4, 5}, {0, 5, 6}, {0, 1, 3}, {1, 4, 6}, {1, 2, 5}, {2, 3, 6}, {0, 2, 4}, {-1, -1, -1}},
        };
        BlockTable t{};
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                for (int k = 0; k < 3; ++k) t.blocks[i][j][k] = raw[i][j][k];
        return t;
    }();
    return table;
}

// Canonical serialization: "i,j:a,b,c;" for every off-diagonal entry in row
// order. The content hash pins transcription in both the header and the
// optional JSON copies.
inline std::string canonical_string(const BlockTable& t) {
    std::string s;
    for (int i = 0; i < BlockTable::order; ++i)
        for (int j = 0; j < BlockTable::order; ++j) {
            if (i == j) continue;
            s += std::to_string(i) + "," + std::to_string(j) + ":";
            const auto& b = t.at(i, j);
            s += std::to_string(b[0]) + "," + std::to_string(b[1]) + "," + std::to_string(b[2]) + ";";
        }
    return s;
}

inline constexpr const char* kBlockTableHash = "7aad0d9eb2c690b5";

// P1: N[i][j] and N[j][i] partition [0,8) minus {i,j}.
// P2: within a row (and within a column) any two blocks meet in exactly one point.
// P3: within a row, j' in N[i][j] iff j not in N[i][j']; same per column.
inline void validate_block_table(const BlockTable& t) {
    auto has = [&](int i, int j, int x) {
        const auto& b = t.at(i, j);
        return b[0] == x || b[1] == x || b[2] == x;
    };
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            if (i == j) continue;
            const auto& b = t.at(i, j);
            if (!(0 <= b[0] && b[0] < b[1] && b[1] < b[2] && b[2] < 8))
                fail(ErrorKind::data_integrity, "block table entry not an ascending 3-subset");
            for (int x : b)
                if (x == i || x == j) fail(ErrorKind::data_integrity, "block contains its own row/column index");
            for (int x = 0; x < 8; ++x) {
                if (x == i || x == j) continue;
                if (has(i, j, x) == has(j, i, x))
                    fail(ErrorKind::data_integrity, "P1 violated at (" + std::to_string(i) + "," +
                                                        std::to_string(j) + ") point " + std::to_string(x));
            }
        }
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            for (int k = j + 1; k < 8; ++k) {
                if (i == j || i == k) continue;
                int row_meet = 0, col_meet = 0;
                for (int x = 0; x < 8; ++x) {
                    if (has(i, j, x) && has(i, k, x)) ++row_meet;
                    if (has(j, i, x) && has(k, i, x)) ++col_meet;
                }
                if (row_meet != 1)
                    fail(ErrorKind::data_integrity, "P2 violated in row " + std::to_string(i));
                if (col_meet != 1)
                    fail(ErrorKind::data_integrity, "P2 violated in column " + std::to_string(i));
                if (has(i, j, k) == has(i, k, j))
                    fail(ErrorKind::data_integrity, "P3 violated in row " + std::to_string(i));
                if (has(j, i, k) == has(k, i, j))
                    fail(ErrorKind::data_integrity, "P3 violated in column " + std::to_string(i));
            }
    if (fnv1a64_hex(canonical_string(t)) != kBlockTableHash)
        fail(ErrorKind::data_integrity, "block table content hash mismatch");
}

// One row of the embedded 35-tree listing: the (a,b) labels as printed and
// the relabeled edge set over Z_11.
struct AffineTreeRow {
    int a;
    int b;
    std::array<std::array<int, 2>, 10> edges;
};

inline const std::vector<AffineTreeRow>& affine_tree_rows() {
    static const std::vector<AffineTreeRow> rows = {
        {1, 1, {{{2, 3}, {1, 2}, {0, 9}, {3, 4}, {3, 8}, {5, 6}, {6, 7}, {0, 6}, {8, 9}, {9, 10}}}},
        {1, 2, {{{0, 3}, {1, 3}, {1, 8}, {3, 5}, {1, 10}, {5, 7}, {6, 8}, {7, 9}, {4, 6}, {2, 8}}}},
        {1, 3, {{{0, 2}, {1, 4}, {2, 5}, {2, 4}, {4, 7}, {5, 8}, {6, 9}, {7, 10}, {3, 6}, {1, 9}}}},
        {1, 4, {{{0, 4}, {2, 9}, {2, 6}, {3, 7}, {0, 10}, {5, 9}, {5, 10}, {0, 7}, {7, 8}, {1, 5}}}},
        {1, 5, {{{0, 5}, {1, 6}, {2, 7}, {4, 5}, {6, 10}, {4, 9}, {0, 1}, {1, 7}, {0, 8}, {3, 9}}}},
        {0, 2, {{{1, 2}, {1, 8}, {2, 4}, {0, 10}, {4, 9}, {1, 6}, {3, 7}, {5, 8}, {7, 9}, {9, 10}}}},
        {1, 2, {{{2, 3}, {1, 3}, {2, 5}, {3, 7}, {6, 10}, {0, 5}, {2, 6}, {4, 7}, {6, 8}, {8, 9}}}},
        {2, 2, {{{0, 3}, {1, 4}, {2, 6}, {4, 5}, {4, 10}, {2, 9}, {2, 4}, {5, 7}, {0, 6}, {4, 8}}}},
        {3, 2, {{{0, 2}, {2, 9}, {2, 7}, {3, 9}, {0, 4}, {2, 5}, {1, 10}, {6, 7}, {9, 10}, {8, 10}}}},
        {5, 2, {{{0, 5}, {1, 7}, {1, 5}, {0, 2}, {1, 8}, {3, 8}, {0, 6}, {4, 6}, {1, 9}, {3, 10}}}},
        {6, 2, {{{0, 1}, {7, 8}, {2, 10}, {1, 3}, {3, 4}, {6, 7}, {7, 9}, {3, 6}, {1, 5}, {4, 10}}}},
        {10, 2, {{{4, 8}, {0, 9}, {3, 5}, {4, 7}, {5, 9}, {0, 1}, {2, 7}, {0, 10}, {6, 9}, {4, 6}}}},
        {0, 3, {{{1, 3}, {2, 6}, {3, 9}, {1, 4}, {3, 8}, {6, 7}, {7, 10}, {0, 8}, {5, 9}, {4, 6}}}},
        {1, 3, {{{2, 3}, {1, 4}, {2, 7}, {3, 10}, {1, 8}, {6, 8}, {0, 7}, {4, 5}, {6, 9}, {9, 10}}}},
        {2, 3, {{{0, 3}, {2, 9}, {0, 8}, {0, 2}, {3, 4}, {5, 6}, {6, 9}, {1, 7}, {0, 10}, {7, 9}}}},
        {3, 3, {{{0, 2}, {1, 6}, {1, 5}, {1, 3}, {5, 7}, {5, 10}, {2, 7}, {5, 8}, {8, 9}, {4, 8}}}},
        {4, 3, {{{0, 4}, {1, 7}, {2, 10}, {0, 9}, {3, 8}, {5, 8}, {0, 1}, {3, 7}, {6, 8}, {8, 10}}}},
        {6, 3, {{{0, 1}, {1, 9}, {1, 2}, {3, 4}, {4, 7}, {4, 9}, {2, 6}, {5, 7}, {2, 8}, {3, 10}}}},
        {7, 3, {{{0, 7}, {8, 10}, {3, 5}, {0, 10}, {0, 5}, {2, 4}, {6, 7}, {8, 9}, {1, 9}, {4, 10}}}},
        {9, 3, {{{2, 8}, {1, 8}, {3, 7}, {4, 10}, {2, 5}, {5, 6}, {0, 6}, {3, 6}, {3, 9}, {5, 10}}}},
        {10, 3, {{{4, 8}, {1, 2}, {2, 5}, {4, 5}, {0, 4}, {3, 5}, {7, 9}, {7, 8}, {6, 10}, {7, 10}}}},
        {0, 5, {{{2, 9}, {2, 10}, {3, 4}, {6, 10}, {3, 5}, {6, 8}, {2, 7}, {0, 6}, {1, 9}, {5, 10}}}},
        {1, 5, {{{2, 3}, {1, 6}, {0, 3}, {3, 5}, {4, 10}, {3, 8}, {6, 9}, {3, 7}, {1, 5}, {7, 10}}}},
        {3, 5, {{{0, 2}, {7, 8}, {3, 7}, {1, 4}, {5, 6}, {0, 1}, {5, 7}, {4, 6}, {6, 10}, {9, 10}}}},
        {5, 5, {{{0, 5}, {8, 10}, {1, 8}, {3, 9}, {3, 4}, {5, 8}, {2, 6}, {7, 8}, {6, 9}, {4, 8}}}},
        {6, 5, {{{0, 1}, {2, 3}, {2, 5}, {3, 10}, {5, 9}, {2, 4}, {0, 6}, {0, 8}, {7, 9}, {8, 10}}}},
        {7, 5, {{{0, 7}, {2, 6}, {0, 2}, {3, 8}, {4, 9}, {1, 10}, {7, 9}, {4, 5}, {8, 9}, {2, 10}}}},
        {0, 7, {{{1, 7}, {0, 9}, {3, 10}, {1, 10}, {2, 5}, {6, 9}, {5, 7}, {7, 8}, {8, 9}, {4, 10}}}},
        {1, 7, {{{2, 3}, {7, 8}, {1, 8}, {0, 2}, {4, 7}, {3, 5}, {5, 10}, {6, 7}, {0, 8}, {4, 9}}}},
        {4, 7, {{{0, 4}, {2, 3}, {2, 7}, {4, 10}, {5, 6}, {2, 6}, {7, 9}, {5, 8}, {1, 9}, {4, 6}}}},
        {5, 7, {{{0, 5}, {0, 8}, {3, 4}, {0, 4}, {5, 7}, {2, 4}, {7, 10}, {6, 8}, {1, 5}, {9, 10}}}},
        {6, 7, {{{0, 1}, {1, 2}, {1, 5}, {3, 5}, {1, 4}, {5, 8}, {1, 10}, {0, 7}, {0, 6}, {3, 9}}}},
        {7, 7, {{{0, 7}, {1, 3}, {2, 10}, {2, 4}, {1, 8}, {5, 9}, {5, 6}, {1, 7}, {6, 10}, {4, 8}}}},
        {8, 7, {{{3, 6}, {1, 4}, {0, 3}, {3, 7}, {3, 4}, {4, 9}, {2, 7}, {8, 9}, {5, 9}, {8, 10}}}},
        {9, 7, {{{2, 8}, {2, 9}, {1, 2}, {4, 5}, {0, 5}, {6, 7}, {3, 7}, {4, 6}, {6, 9}, {2, 10}}}},
    };
    return rows;
}

// "a,b:u-v,u-v,...;" per row, edges in canonical sorted order.
inline std::string canonical_string(const std::vector<AffineTreeRow>& rows) {
    std::string s;
    for (const AffineTreeRow& row : rows) {
        std::vector<Edge> edges;
        for (const auto& e : row.edges) edges.push_back(make_edge(e[0], e[1]));
        std::sort(edges.begin(), edges.end());
        s += std::to_string(row.a) + "," + std::to_string(row.b) + ":";
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(edges[i].u) + "-" + std::to_string(edges[i].v);
        }
        s += ";";
    }
    return s;
}

inline constexpr const char* kAffineTreeRowsHash = "6f0e6944d564f7de";

inline void validate_affine_tree_rows(const std::vector<AffineTreeRow>& rows) {
    if (rows.size() != 35) fail(ErrorKind::data_integrity, "expected 35 relabeled affine trees");
    std::vector<EdgeSet> seen;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::vector<std::pair<int, int>> pairs;
        for (const auto& e : rows[r].edges) pairs.emplace_back(e[0], e[1]);
        EdgeSet edges = EdgeSet::from_pairs(11, pairs);
        if (!is_spanning_tree(11, edges))
            fail(ErrorKind::data_integrity, "row " + std::to_string(r + 1) + " is not a spanning tree");
        for (const EdgeSet& other : seen)
            if (other == edges) fail(ErrorKind::data_integrity, "duplicate tree row " + std::to_string(r + 1));
        seen.push_back(std::move(edges));
    }
    if (fnv1a64_hex(canonical_string(rows)) != kAffineTreeRowsHash)
        fail(ErrorKind::data_integrity, "affine tree table content hash mismatch");
}

}  // namespace treecode
