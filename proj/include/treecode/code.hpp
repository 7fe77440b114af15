#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "treecode/graph.hpp"

namespace treecode {

// A set of same-n spanning trees used as codewords.
struct TreeCode {
    int n = 0;
    std::vector<LabeledTree> codewords;
    std::optional<int> claimed_distance;
    std::string family;
};

struct DistanceReport {
    int min_distance = 0;
    std::pair<std::size_t, std::size_t> argmin_pair{0, 0};  // lexicographically first attaining pair
    int max_shared_edges = 0;
    std::uint64_t pair_count_checked = 0;
};

namespace detail {

inline std::vector<EdgeBits> codeword_bits(const TreeCode& code) {
    std::vector<EdgeBits> bits;
    bits.reserve(code.codewords.size());
    for (const LabeledTree& t : code.codewords) bits.emplace_back(t.edge_set());
    return bits;
}

struct PairScanBest {
    int max_shared = -1;
    std::size_t i = 0, j = 0;

    void offer(int shared, std::size_t a, std::size_t b) {
        if (shared > max_shared) {
            max_shared = shared;
            i = a;
            j = b;
        }
        // equal shared: keep the earlier pair; scan order is already lexicographic
    }

    void merge(const PairScanBest& other) {
        if (other.max_shared > max_shared ||
            (other.max_shared == max_shared && std::make_pair(other.i, other.j) < std::make_pair(i, j)))
            *this = other;
    }
};

}  // namespace detail

// Exact minimum distance over all codeword pairs. Optional parallel scan over
// row blocks; the merge keeps the lexicographically first argmin, so the
// result is independent of the thread count.
inline DistanceReport min_distance(const TreeCode& code, int threads = 1) {
    const std::size_t m = code.codewords.size();
    if (m < 2) fail(ErrorKind::undefined, "minimum distance undefined for fewer than 2 codewords");
    for (const LabeledTree& t : code.codewords)
        if (t.n() != code.n) fail(ErrorKind::dimension, "codeword n differs from code n");

    const std::vector<EdgeBits> bits = detail::codeword_bits(code);
    auto scan_rows = [&](std::size_t row_begin, std::size_t row_end, detail::PairScanBest& best) {
        for (std::size_t i = row_begin; i < row_end; ++i)
            for (std::size_t j = i + 1; j < m; ++j) best.offer(bits[i].intersect_count(bits[j]), i, j);
    };

    detail::PairScanBest best;
    if (threads <= 1 || m < 64) {
        scan_rows(0, m, best);
    } else {
        const std::size_t workers = std::min<std::size_t>(threads, m);
        std::vector<detail::PairScanBest> partial(workers);
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                // strided rows balance the triangular workload well enough
                detail::PairScanBest local;
                for (std::size_t i = w; i < m; i += workers)
                    for (std::size_t j = i + 1; j < m; ++j) local.offer(bits[i].intersect_count(bits[j]), i, j);
                partial[w] = local;
            });
        for (auto& t : pool) t.join();
        for (const auto& p : partial) best.merge(p);
    }

    DistanceReport report;
    report.max_shared_edges = best.max_shared;
    report.min_distance = code.n - 1 - best.max_shared;
    report.argmin_pair = {best.i, best.j};
    report.pair_count_checked = static_cast<std::uint64_t>(m) * (m - 1) / 2;
    return report;
}

struct VerifyReport {
    bool ok = false;
    DistanceReport distance;
};

// Re-validates every codeword and the pairwise-distinctness invariant, then
// checks min distance against the expectation.
inline VerifyReport verify(const TreeCode& code, int expected_distance, int threads = 1) {
    for (std::size_t i = 0; i < code.codewords.size(); ++i)
        if (!is_spanning_tree(code.n, code.codewords[i].edge_set()))
            fail(ErrorKind::structure, "codeword " + std::to_string(i) + " is not a spanning tree");
    for (std::size_t i = 0; i < code.codewords.size(); ++i)
        for (std::size_t j = i + 1; j < code.codewords.size(); ++j)
            if (code.codewords[i] == code.codewords[j])
                fail(ErrorKind::structure,
                     "codewords " + std::to_string(i) + " and " + std::to_string(j) + " are identical");
    VerifyReport report;
    report.distance = min_distance(code, threads);
    report.ok = report.distance.min_distance >= expected_distance;
    return report;
}

enum class DecodeMode { strict, permissive };

struct ErasureDecodeResult {
    std::vector<std::size_t> candidates;  // ascending codeword indices
    bool unique() const { return candidates.size() == 1; }
};

// Erasure decoding: the received forest is a codeword with edges deleted;
// candidates are the codewords containing every received edge. Uniqueness is
// guaranteed by the code's distance d once >= n-d edges survive.
inline ErasureDecodeResult decode_erasures(const TreeCode& code, const Forest& received,
                                           DecodeMode mode = DecodeMode::strict) {
    if (received.n() != code.n) fail(ErrorKind::dimension, "received word n differs from code n");
    const EdgeBits received_bits(received.edge_set());
    ErasureDecodeResult result;
    for (std::size_t i = 0; i < code.codewords.size(); ++i)
        if (EdgeBits(code.codewords[i].edge_set()).contains_all(received_bits)) result.candidates.push_back(i);

    if (result.candidates.empty())
        fail(ErrorKind::no_candidate, "received edges are not contained in any codeword");
    if (mode == DecodeMode::strict && result.candidates.size() > 1) {
        std::string list;
        for (std::size_t idx : result.candidates) list += (list.empty() ? "" : ",") + std::to_string(idx);
        fail(ErrorKind::ambiguity,
             std::to_string(result.candidates.size()) + " codewords contain the received edges: [" + list + "]");
    }
    return result;
}

struct ErrorDecodeResult {
    std::vector<std::size_t> candidates;  // all codewords attaining the minimum, ascending
    int distance = 0;                     // n-1 - max shared with the received edge set
    bool unique() const { return candidates.size() == 1; }
};

// Error decoding: received is any (n-1)-subset of E(K_n); returns the
// codeword(s) sharing the most edges with it. Unique whenever the distance
// found is at most floor((d-1)/2).
inline ErrorDecodeResult decode_errors(const TreeCode& code, const EdgeSet& received) {
    if (received.n() != code.n) fail(ErrorKind::dimension, "received word n differs from code n");
    if (static_cast<int>(received.size()) != code.n - 1)
        fail(ErrorKind::dimension, "error decoding expects exactly n-1 received edges");
    const EdgeBits received_bits(received);
    int best_shared = -1;
    ErrorDecodeResult result;
    for (std::size_t i = 0; i < code.codewords.size(); ++i) {
        int shared = EdgeBits(code.codewords[i].edge_set()).intersect_count(received_bits);
        if (shared > best_shared) {
            best_shared = shared;
            result.candidates.assign(1, i);
        } else if (shared == best_shared) {
            result.candidates.push_back(i);
        }
    }
    result.distance = code.n - 1 - best_shared;
    return result;
}

}  // namespace treecode
