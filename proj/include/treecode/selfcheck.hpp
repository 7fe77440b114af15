#pragma once

#include <chrono>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "treecode/bounds.hpp"
#include "treecode/code.hpp"
#include "treecode/constructions.hpp"
#include "treecode/oracle.hpp"
#include "treecode/prufer.hpp"
#include "treecode/rng.hpp"

namespace treecode {

struct CheckResult {
    std::string id;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
    double budget_seconds = 0.0;
};

namespace selfcheck {

class Check {
  public:
    explicit Check(std::ostringstream& out) : out_(out) {}

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok_ = false;
            out_ << "FAILED: " << what << "; ";
        }
    }

    bool ok() const { return ok_; }

  private:
    std::ostringstream& out_;
    bool ok_ = true;
};

template <typename Body>
CheckResult timed(std::string id, std::string title, double budget_seconds, Body&& body) {
    CheckResult r;
    r.id = std::move(id);
    r.title = std::move(title);
    r.budget_seconds = budget_seconds;
    std::ostringstream out;
    Check check(out);
    auto start = std::chrono::steady_clock::now();
    try {
        body(check, out);
        r.pass = check.ok();
    } catch (const std::exception& e) {
        r.pass = false;
        out << "exception: " << e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.seconds > budget_seconds) {
        r.pass = false;
        out << "over time budget of " << budget_seconds << "s; ";
    }
    r.detail = out.str();
    return r;
}

inline bool is_hamiltonian_path(const LabeledTree& t) {
    int leaves = 0;
    for (int deg : t.degrees()) {
        if (deg > 2) return false;
        if (deg == 1) ++leaves;
    }
    return leaves == 2;  // n-1 edges + connectivity already hold for a LabeledTree
}

// strict one-codeword recovery after random erasures and random substitutions
inline bool decoding_trials(const TreeCode& code, int erasures, int substitutions, int trials,
                            std::uint64_t seed, std::string& failure) {
    SplitMix64 rng(seed);
    const int n = code.n;
    std::vector<Edge> complement_pool;
    for (int trial = 0; trial < trials; ++trial) {
        const std::size_t cw = static_cast<std::size_t>(rng.below(code.codewords.size()));
        const std::vector<Edge>& edges = code.codewords[cw].edges();

        {  // erasure trial
            std::vector<Edge> kept = edges;
            for (int e = 0; e < erasures; ++e)
                kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(rng.below(kept.size())));
            Forest received(n, EdgeSet(n, kept));
            ErasureDecodeResult result = decode_erasures(code, received, DecodeMode::strict);
            if (!result.unique() || result.candidates[0] != cw) {
                failure = "erasure trial " + std::to_string(trial) + " on codeword " + std::to_string(cw);
                return false;
            }
        }

        {  // substitution trial
            complement_pool.clear();
            const EdgeSet& cw_edges = code.codewords[cw].edge_set();
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (!cw_edges.contains(Edge{u, v})) complement_pool.push_back(Edge{u, v});
            std::vector<Edge> received = edges;
            for (int s = 0; s < substitutions; ++s) {
                received.erase(received.begin() + static_cast<std::ptrdiff_t>(rng.below(received.size())));
                std::size_t pick = static_cast<std::size_t>(rng.below(complement_pool.size()));
                received.push_back(complement_pool[pick]);
                complement_pool.erase(complement_pool.begin() + static_cast<std::ptrdiff_t>(pick));
            }
            ErrorDecodeResult result = decode_errors(code, EdgeSet(n, received));
            if (!result.unique() || result.candidates[0] != cw) {
                failure = "substitution trial " + std::to_string(trial) + " on codeword " + std::to_string(cw);
                return false;
            }
        }
    }
    return true;
}

inline CheckResult closed_form_exact_values() {
    return timed("exact-values", "branch-and-bound reproduces the known exact code sizes", 120.0,
                 [](Check& check, std::ostringstream& out) {
                     struct Case {
                         int n, d;
                         long long expected;
                     };
                     for (Case c : {Case{4, 3, 2}, Case{5, 4, 2}, Case{4, 2, 4}, Case{5, 3, 5}, Case{4, 1, 16},
                                    Case{5, 1, 125}}) {
                         ExactAResult r = exact_A(c.n, c.d);
                         check.expect(r.certified, "search not certified at (" + std::to_string(c.n) + "," +
                                                       std::to_string(c.d) + ")");
                         check.expect(r.value == c.expected,
                                      "A(" + std::to_string(c.n) + "," + std::to_string(c.d) + ") = " +
                                          std::to_string(r.value) + ", expected " + std::to_string(c.expected));
                         out << "A(" << c.n << "," << c.d << ")=" << r.value << " ";
                     }
                 });
}

inline CheckResult triple_path_construction() {
    return timed("triple-paths", "field-line Hamiltonian paths: sizes, path property, shared-edge caps", 5.0,
                 [](Check& check, std::ostringstream& out) {
                     for (int p : {5, 7}) {
                         TreeCode code = affine_triple_paths(p);
                         const int n = 3 * p;
                         check.expect(code.n == n, "wrong n");
                         check.expect(static_cast<int>(code.codewords.size()) == (p - 1) * (p - 3),
                                      "wrong family size at p=" + std::to_string(p));
                         for (const LabeledTree& t : code.codewords)
                             check.expect(is_hamiltonian_path(t), "codeword is not a Hamiltonian path");

                         // per-pair caps: at most 1 shared edge inside each layer class
                         auto layer_of = [p](int v) { return v / p; };
                         const auto& cws = code.codewords;
                         int max_total = 0;
                         for (std::size_t i = 0; i < cws.size(); ++i)
                             for (std::size_t j = i + 1; j < cws.size(); ++j) {
                                 int by_class[3] = {0, 0, 0};
                                 for (const Edge& e : cws[i].edges())
                                     if (cws[j].edge_set().contains(e)) {
                                         int sum = layer_of(e.u) + layer_of(e.v);
                                         // classes: V1-V2 (sum 1), V2-V3 (sum 3), V1-V3 (sum 2)
                                         int cls = sum == 1 ? 0 : (sum == 3 ? 1 : 2);
                                         ++by_class[cls];
                                     }
                                 for (int cls = 0; cls < 3; ++cls)
                                     check.expect(by_class[cls] <= 1, "more than one shared edge in a layer class");
                                 max_total = std::max(max_total, by_class[0] + by_class[1] + by_class[2]);
                             }
                         check.expect(max_total <= 3, "pair shares more than 3 edges at p=" + std::to_string(p));
                         DistanceReport r = min_distance(code);
                         check.expect(r.min_distance >= n - 4, "min distance below n-4");
                         out << "p=" << p << ": size=" << code.codewords.size() << " min_d=" << r.min_distance
                             << " (n-4=" << n - 4 << ") ";
                     }
                 });
}

inline CheckResult cubic_tree_construction() {
    return timed("cubic-trees", "cubic permutation-polynomial trees over GF(9): size, trees, distance", 10.0,
                 [](Check& check, std::ostringstream& out) {
                     Field gf9 = Field::gf3(2);
                     TreeCode code = cubic_pp_trees(gf9);
                     check.expect(code.n == 18, "wrong n");
                     check.expect(code.codewords.size() == 144, "expected 18*16*16/32 = 144 codewords");
                     for (const LabeledTree& t : code.codewords)
                         check.expect(is_spanning_tree(18, t.edge_set()), "codeword is not a spanning tree");

                     // every stem polynomial a x^3 - b x + c must permute GF(9)
                     for (int i = 2; i <= 8; i += 2)
                         for (int j = 1; j <= 7; j += 2)
                             for (int c = 0; c < 9; ++c) {
                                 FieldElement a = gf9.omega().pow(i), b = gf9.omega().pow(j);
                                 bool pp = is_permutation_polynomial(gf9, {gf9.element(c), -b, gf9.zero(), a});
                                 check.expect(pp, "stem polynomial is not a permutation polynomial");
                             }

                     DistanceReport r = min_distance(code);
                     check.expect(r.max_shared_edges <= 12, "a pair shares more than 12 edges");
                     check.expect(r.min_distance >= 5, "min distance below n-13 = 5");
                     out << "size=" << code.codewords.size() << " min_d=" << r.min_distance
                         << " max_shared=" << r.max_shared_edges << " ";
                 });
}

inline CheckResult two_center_star_code() {
    return timed("two-center-stars", "block-design two-center stars over 8 nodes reach distance 5", 1.0,
                 [](Check& check, std::ostringstream& out) {
                     validate_block_table(two_center_star_blocks());  // P1-P3 + content hash
                     TreeCode code = bibd_two_star_code();
                     check.expect(code.codewords.size() == 28, "expected 28 codewords");
                     for (const LabeledTree& t : code.codewords)
                         check.expect(t.edges().size() == 7, "codeword without 7 edges");
                     DistanceReport r = min_distance(code);
                     check.expect(r.min_distance == 5, "min distance is not exactly 5");
                     out << "min_d=" << r.min_distance << " over " << r.pair_count_checked << " pairs ";
                 });
}

inline CheckResult affine_relabeling_code() {
    return timed("affine-relabeling", "edge-permuted affine family over Z_11 yields the 35-tree code", 1.0,
                 [](Check& check, std::ostringstream& out) {
                     AffineGraphFamily family = furedi_family(11);
                     check.expect(family.graphs.size() == 49, "expected 49 graphs");
                     for (const AffineGraph& g : family.graphs)
                         check.expect(g.edges.size() == 10, "graph without exactly 10 edges");
                     int worst = 0;
                     for (std::size_t i = 0; i < family.graphs.size(); ++i)
                         for (std::size_t j = i + 1; j < family.graphs.size(); ++j)
                             worst = std::max(worst, shared_edges(family.graphs[i].edges, family.graphs[j].edges));
                     check.expect(worst <= 2, "family members share more than 2 edges");

                     FurediCrossCheck xc = furedi_sigma_cross_check();
                     check.expect(xc.sigma_tree_count == 35, "expected exactly 35 trees after the permutation");
                     if (!xc.edge_sets_match) {
                         out << "mismatched rows:";
                         for (int r : xc.unmatched_rows) out << " " << r;
                         out << "; ";
                     }

                     TreeCode code = code_11_35_8();
                     DistanceReport r = min_distance(code);
                     check.expect(r.min_distance >= 8, "min distance below 8");
                     out << "family shared<=" << worst << ", sigma trees=" << xc.sigma_tree_count
                         << ", table match=" << (xc.edge_sets_match ? "yes" : "no")
                         << ", min_d=" << r.min_distance << " ";
                 });
}

inline CheckResult counting_identities() {
    return timed("counting-identities", "rooted-forest and containment counts match their closed forms", 180.0,
                 [](Check& check, std::ostringstream& out) {
                     // rooted forests: every nonempty root set X, n <= 6
                     for (int n = 2; n <= 6; ++n) {
                         for (int mask = 1; mask < (1 << n); ++mask) {
                             std::vector<int> roots;
                             for (int v = 0; v < n; ++v)
                                 if (mask >> v & 1) roots.push_back(v);
                             const long long d = static_cast<long long>(roots.size());
                             long long expected = 1;  // d = n: only the empty forest
                             if (d < n) {
                                 expected = d;
                                 for (long long e = 0; e < n - 1 - d; ++e) expected *= n;
                             }
                             long long got = count_rooted_forests(n, roots);
                             if (got != expected) {
                                 check.expect(false, "rooted forest count mismatch at n=" + std::to_string(n) +
                                                         ", |X|=" + std::to_string(d));
                                 return;
                             }
                         }
                     }
                     out << "rooted forests ok (n<=6); ";

                     // containment counts: every forest, n <= 5
                     for (int n = 2; n <= 5; ++n) {
                         const std::vector<Edge> all = treecode::detail::all_edges(n);
                         for (int k = 0; k <= n - 1; ++k) {
                             treecode::detail::for_each_subset(
                                 static_cast<int>(all.size()), k, [&](const std::vector<int>& pick) {
                                     std::vector<Edge> edges;
                                     for (int idx : pick) edges.push_back(all[idx]);
                                     EdgeSet es(n, edges);
                                     if (!es.is_acyclic()) return;
                                     Forest f(n, es);
                                     auto comps = components(f);
                                     long long expected = 1;
                                     if (comps.size() >= 2) {
                                         for (const auto& comp : comps)
                                             expected *= static_cast<long long>(comp.size());
                                         for (std::size_t e = 2; e < comps.size(); ++e) expected *= n;
                                     }
                                     long long got = count_trees_containing(f);
                                     if (got != expected)
                                         check.expect(false, "containment count mismatch at n=" + std::to_string(n));
                                 });
                         }
                     }
                     out << "containment ok (n<=5); ";

                     // containment counts: 1000 seeded random forests at n = 6 and 7
                     for (int n : {6, 7}) {
                         SplitMix64 rng(0x5eed0000ULL + static_cast<std::uint64_t>(n));
                         std::vector<Forest> forests;
                         std::vector<long long> expected;
                         const std::vector<Edge> all = treecode::detail::all_edges(n);
                         while (forests.size() < 1000) {
                             int k = static_cast<int>(rng.below(n));  // 0..n-1 edges
                             std::vector<int> idx(all.size());
                             std::iota(idx.begin(), idx.end(), 0);
                             deterministic_shuffle(idx, rng);
                             std::vector<Edge> edges;
                             UnionFind uf(n);
                             for (std::size_t t = 0; t < all.size() && static_cast<int>(edges.size()) < k; ++t)
                                 if (uf.unite(all[idx[t]].u, all[idx[t]].v)) edges.push_back(all[idx[t]]);
                             Forest f(n, EdgeSet(n, edges));
                             auto comps = components(f);
                             long long want = 1;
                             if (comps.size() >= 2) {
                                 for (const auto& comp : comps) want *= static_cast<long long>(comp.size());
                                 for (std::size_t e = 2; e < comps.size(); ++e) want *= n;
                             }
                             forests.push_back(std::move(f));
                             expected.push_back(want);
                         }
                         std::vector<long long> got = count_trees_containing_batch(n, forests);
                         for (std::size_t i = 0; i < got.size(); ++i)
                             if (got[i] != expected[i]) {
                                 check.expect(false, "random containment mismatch at n=" + std::to_string(n));
                                 break;
                             }
                     }
                     out << "random containment ok (n=6,7); ";

                     // Pruefer bijection, exhaustive for n <= 6
                     for (int n = 2; n <= 6; ++n) {
                         long long seen = 0;
                         bool ok = true;
                         for_each_spanning_tree(n, [&](const LabeledTree& t) {
                             ++seen;
                             if (!(prufer_decode(prufer_encode(t)) == t)) ok = false;
                         });
                         check.expect(ok, "Pruefer round trip failed at n=" + std::to_string(n));
                         check.expect(seen == static_cast<long long>(cayley_count(n)),
                                      "tree count mismatch at n=" + std::to_string(n));
                     }
                     out << "Pruefer round trip ok (n<=6)";
                 });
}

inline CheckResult bound_sandwich() {
    return timed("bound-sandwich", "exact values sit between every applicable bound for n = 4, 5", 30.0,
                 [](Check& check, std::ostringstream& out) {
                     for (int n = 4; n <= 5; ++n)
                         for (int d = 1; d <= n - 1; ++d) {
                             long long exact = exact_A(n, d).value;
                             for (const BoundValue& b : bounds_table(n, d, true)) {
                                 if (!b.applicable) continue;
                                 if (b.kind == BoundKind::lower)
                                     check.expect(Int(exact) >= b.rounded,
                                                  b.name + " exceeds A(" + std::to_string(n) + "," +
                                                      std::to_string(d) + ")=" + std::to_string(exact));
                                 else
                                     check.expect(Int(exact) <= b.rounded,
                                                  b.name + " is below A(" + std::to_string(n) + "," +
                                                      std::to_string(d) + ")=" + std::to_string(exact));
                             }
                             out << "A(" << n << "," << d << ")=" << exact << " ";
                         }
                 });
}

inline CheckResult constant_curves() {
    return timed("constants", "bound constants: spot values, monotonicity, crossover identity", 10.0,
                 [](Check& check, std::ostringstream& out) {
                     DeltaCurvePoint mid = delta_constants(0.5);
                     check.expect(std::abs(mid.C_delta - std::numbers::e / 4.0) < 1e-12, "C(1/2) is not e/4");
                     check.expect(mid.c_delta == 0.125, "c(1/2) is not exactly 0.125");
                     out << "C(0.5)=" << mid.C_delta << " c(0.5)=" << mid.c_delta << "; ";

                     double prev_c = delta_constants(0.001).c_delta;
                     bool c_monotone = true;
                     for (int i = 2; i <= 999; ++i) {
                         double cur = delta_constants(i * 0.001).c_delta;
                         if (cur >= prev_c) c_monotone = false;
                         prev_c = cur;
                     }
                     check.expect(c_monotone, "c_delta is not strictly decreasing on (0,1)");

                     double prev_C = delta_constants(0.1323).C_delta;
                     bool C_monotone = true;
                     for (int i = 1; 0.1323 + i * 0.001 < 0.9995; ++i) {
                         double cur = delta_constants(0.1323 + i * 0.001).C_delta;
                         if (cur >= prev_C) C_monotone = false;
                         prev_C = cur;
                     }
                     check.expect(C_monotone, "C_delta is not strictly decreasing on (0.1313,1)");

                     check.expect(std::abs(delta_constants(1e-6).c_delta - 1.0) < 1e-3, "c does not approach 1");

                     for (long long n : {8, 12, 16}) {
                         long long d = n / 2;
                         Rat product_form =
                             Rat(int_pow(Int(d), d) * int_pow(Int(n), n - 2 * d), binomial(n - 1, d - 1));
                         Rat balanced_form = rat_pow(Rat(n, 2), n - d) / Rat(binomial(n - 1, d - 1));
                         check.expect(product_form == balanced_form,
                                      "lower-bound crossover fails at n=" + std::to_string(n));
                     }
                     out << "monotone + crossover ok";
                 });
}

inline CheckResult decoding_battery() {
    return timed("decoding-trials", "seeded erasure and substitution decoding across every family", 60.0,
                 [](Check& check, std::ostringstream& out) {
                     struct FamilyCase {
                         std::string tag;
                         TreeCode code;
                     };
                     std::vector<FamilyCase> cases;
                     cases.push_back({"stars(8)", stars(8)});
                     cases.push_back({"ham-paths(6)", hamiltonian_paths(6)});
                     cases.push_back({"paths-stars(8)", paths_and_stars(8)});
                     cases.push_back({"affine-n4(p=5)", affine_triple_paths(5)});
                     cases.push_back({"cubic-n13(q=9)", cubic_pp_trees(Field::gf3(2))});
                     cases.push_back({"bibd-8-28-5", bibd_two_star_code()});
                     cases.push_back({"furedi-11-35-8", code_11_35_8()});
                     std::uint64_t seed = 0x7ee5;
                     for (const FamilyCase& fc : cases) {
                         const int d = *fc.code.claimed_distance;
                         std::string failure;
                         bool ok = decoding_trials(fc.code, d - 1, (d - 1) / 2, 1000, seed++, failure);
                         check.expect(ok, fc.tag + ": " + failure);
                         out << fc.tag << " ok; ";
                     }
                 });
}

inline CheckResult spot_values() {
    return timed("spot-values", "forest-double-count bound: spot value and d=1 tightness", 10.0,
                 [](Check& check, std::ostringstream& out) {
                     check.expect(first_upper_bound(8, 5).rounded == 128, "bound at (8,5) is not 128");
                     for (int n = 3; n <= 6; ++n) {
                         BoundValue b = first_upper_bound(n, 1);
                         long long trees = 0;
                         for_each_spanning_tree(n, [&](const LabeledTree&) { ++trees; });
                         check.expect(b.rounded == Int(trees),
                                      "bound at (" + std::to_string(n) + ",1) does not match the tree count");
                     }
                     out << "(8,5)->128; (n,1) tight for n<=6";
                 });
}

}  // namespace selfcheck

inline std::vector<CheckResult> run_acceptance_checks() {
    return {
        selfcheck::closed_form_exact_values(),
        selfcheck::triple_path_construction(),
        selfcheck::cubic_tree_construction(),
        selfcheck::two_center_star_code(),
        selfcheck::affine_relabeling_code(),
        selfcheck::counting_identities(),
        selfcheck::bound_sandwich(),
        selfcheck::constant_curves(),
        selfcheck::decoding_battery(),
        selfcheck::spot_values(),
    };
}

}  // namespace treecode
