#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "treecode/errors.hpp"
#include "treecode/field.hpp"
#include "treecode/oracle.hpp"

namespace treecode {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_pow(Int base, long long e) {
    if (e < 0) fail(ErrorKind::domain, "negative integer power");
    return boost::multiprecision::pow(base, static_cast<unsigned>(e));
}

inline Rat rat_pow(const Rat& base, long long e) {
    if (e >= 0)
        return Rat(int_pow(boost::multiprecision::numerator(base), e),
                   int_pow(boost::multiprecision::denominator(base), e));
    if (base == 0) fail(ErrorKind::domain, "negative power of zero");
    return Rat(int_pow(boost::multiprecision::denominator(base), -e),
               int_pow(boost::multiprecision::numerator(base), -e));
}

inline Int binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact at every step
    }
    return r;
}

inline Int floor_rat(const Rat& x) {
    Int num = boost::multiprecision::numerator(x);
    Int den = boost::multiprecision::denominator(x);  // always > 0
    Int q = num / den;
    if (num < 0 && q * den != num) --q;
    return q;
}

inline Int ceil_rat(const Rat& x) { return -floor_rat(-x); }

inline double log10_int(const Int& x) {
    if (x <= 0) fail(ErrorKind::domain, "log of non-positive value");
    const unsigned bits = boost::multiprecision::msb(x);  // index of highest set bit
    if (bits <= 52) return std::log10(x.convert_to<double>());
    Int top = x >> (bits - 52);
    return std::log10(top.convert_to<double>()) + static_cast<double>(bits - 52) * std::numbers::ln2 / std::numbers::ln10;
}

inline double log10_rat(const Rat& x) {
    return log10_int(boost::multiprecision::numerator(x)) - log10_int(boost::multiprecision::denominator(x));
}

enum class BoundKind { upper, lower };

// One evaluated bound with provenance. Upper bounds are floored and lower
// bounds ceiled, the tightest integer statement since A(n,d) is an integer.
// Entries whose stated n-threshold is not met are flagged, never dropped.
struct BoundValue {
    std::string name;
    BoundKind kind = BoundKind::upper;
    std::optional<Rat> exact;
    Int rounded = 0;
    double log10_value = 0.0;
    bool applicable = true;
    std::string applicability;  // human-readable precondition, empty if unconditional
    std::string note;
};

namespace detail {

inline BoundValue make_bound(std::string name, BoundKind kind, Rat exact, bool applicable,
                             std::string applicability = "", std::string note = "") {
    BoundValue b;
    b.name = std::move(name);
    b.kind = kind;
    b.rounded = kind == BoundKind::upper ? floor_rat(exact) : ceil_rat(exact);
    if (kind == BoundKind::lower && b.rounded < 1) {
        b.rounded = 1;  // one tree always exists
        if (!note.empty()) note += "; ";
        note += "clamped to 1";
    }
    b.log10_value = exact > 0 ? log10_rat(exact) : -std::numeric_limits<double>::infinity();
    b.exact = std::move(exact);
    b.applicable = applicable;
    b.applicability = std::move(applicability);
    b.note = std::move(note);
    return b;
}

}  // namespace detail

// n^(n-d) / (n-d+1): sphere packing fed with the double-counting estimate of
// the forest count.
inline BoundValue first_upper_bound(long long n, long long d) {
    if (d < 1 || d > n - 2) fail(ErrorKind::parameter, "forest-double-count bound needs 1 <= d <= n-2");
    Rat exact(int_pow(Int(n), n - d), Int(n - d + 1));
    return detail::make_bound("forest-double-count", BoundKind::upper, std::move(exact), true);
}

// |F(n,d)| / C(n-1,d-1). For n within the enumeration cap the forest count is
// exact; beyond it the double-counting estimate C(n,d) d n^(n-1-d)/(n-d+1)
// stands in, and the note records which count was used.
inline BoundValue sphere_packing_bound(long long n, long long d, int exact_cap = kForestCountCap) {
    if (d < 1 || d > n - 1) fail(ErrorKind::parameter, "sphere packing needs 1 <= d <= n-1");
    Int denom = binomial(n - 1, d - 1);
    if (n <= exact_cap) {
        long long forests = count_forests(static_cast<int>(n), static_cast<int>(d));
        Rat exact(Int(forests), denom);
        return detail::make_bound("sphere-packing", BoundKind::upper, std::move(exact), true, "",
                                  "forest count: exact enumeration (" + std::to_string(forests) + ")");
    }
    Rat forest_estimate = Rat(binomial(n, d) * d * int_pow(Int(n), n - 1 - d), Int(n - d + 1));
    Rat exact = forest_estimate / denom;
    return detail::make_bound("sphere-packing", BoundKind::upper, std::move(exact), true, "",
                              "forest count: double-counting estimate");
}

// Pigeonhole chain through the subcodes whose codewords all share i common
// edges: A(n,d) <= M(n,d) * C(n,2)^(n-d-2) / ((d+2)...(n-1)), where M(n,d)
// caps the subcode at i = n-d-2 by a 2-star double count. The note records
// which branch of the M(n,d) bound applied.
inline BoundValue second_upper_bound(long long n, long long d) {
    if (d <= 1 || d > n - 2) fail(ErrorKind::parameter, "common-edge-chain bound needs 1 < d <= n-2");
    const long long i_max = n - d - 2;
    const Int pairs = binomial(n, 2);
    const Int bar_e = pairs - i_max;

    Rat branch1 = Rat(binomial(pairs.convert_to<long long>(), 2), binomial(d + 1, 2));
    Int denom2 = Int(d + 1) * Int(d + 1) - bar_e;
    std::string note;
    Rat subcode_cap;
    if (denom2 > 0) {
        Rat branch2 = Rat(Int(d) * bar_e, denom2);
        if (branch2 < branch1) {
            subcode_cap = branch2;
            note = "subcode cap: degree-average branch";
        } else {
            subcode_cap = branch1;
            note = "subcode cap: pair-count branch";
        }
    } else {
        subcode_cap = branch1;
        note = "subcode cap: pair-count branch (degree-average branch undefined)";
    }

    Rat chain(int_pow(pairs, i_max), 1);
    for (long long t = d + 2; t <= n - 1; ++t) chain /= t;
    return detail::make_bound("common-edge-chain", BoundKind::upper, subcode_cap * chain, true, "", note);
}

// The closed-form refinements for d = n-3, n-4, n-5 plus the older quadratic
// cap, each tagged with its validity threshold, plus the restricted-subcode
// caps they are derived from (those bound A(n,d;i), not A(n,d)).
inline std::vector<BoundValue> explicit_upper_bounds(long long n) {
    std::vector<BoundValue> out;
    out.push_back(detail::make_bound("quadratic-n3", BoundKind::upper, Rat(Int(n) * Int(n)), n >= 9,
                                     "n >= 9", "applies to d = n-3"));
    out.push_back(detail::make_bound("refined-n3", BoundKind::upper, Rat(Int(n) * Int(n + 2), 2), n >= 13,
                                     "n >= 13", "applies to d = n-3"));
    {
        Int p = Int(n) * Int(n) * Int(n) + 5 * Int(n) * Int(n) + 6 * Int(n) + 12;
        out.push_back(detail::make_bound("refined-n4", BoundKind::upper, Rat(p, 4), n >= 35, "n >= 35",
                                         "applies to d = n-4"));
    }
    {
        Int n2 = Int(n) * Int(n);
        Int p = n2 * n2 + 9 * n2 * Int(n) + 28 * n2 + 92 * Int(n) + 292;
        out.push_back(detail::make_bound("refined-n5", BoundKind::upper, Rat(p, 8), n >= 117, "n >= 117",
                                         "applies to d = n-5; the supporting subcode cap already holds for n >= 69"));
    }
    out.push_back(detail::make_bound("subcode-cap-n3", BoundKind::upper, Rat(Int(n + 2)), n >= 13, "n >= 13",
                                     "caps the size of codes whose words share 1 edge; not a bound on A(n,d)"));
    out.push_back(detail::make_bound("subcode-cap-n4", BoundKind::upper, Rat(Int(n + 4)), n >= 35, "n >= 35",
                                     "caps the size of codes whose words share 2 edges; not a bound on A(n,d)"));
    out.push_back(detail::make_bound("subcode-cap-n5", BoundKind::upper, Rat(Int(n + 6)), n >= 69, "n >= 69",
                                     "caps the size of codes whose words share 3 edges; not a bound on A(n,d)"));
    return out;
}

// 2 (n/2)^(n-d-1): the leading term of the constant-gap regime. The trailing
// terms cannot be evaluated at finite n, so this entry is always flagged
// non-certifying and never participates in consistency checks.
inline BoundValue leading_form_constant_gap(long long n, long long d) {
    if (d < 1 || d > n - 2) fail(ErrorKind::parameter, "leading form needs 1 <= d <= n-2");
    Rat exact = Rat(2) * rat_pow(Rat(n, 2), n - d - 1);
    return detail::make_bound("leading-form-constant-gap", BoundKind::upper, std::move(exact), false,
                              "asymptotic only (constant n-d, large n)",
                              "leading term of the constant-gap upper bound; non-certifying at finite n");
}

// Independent-set bound on the tree conflict graph:
// A(n,d) >= d^d n^(n-2d) / C(n-1,d-1), and for d >= n/2 the balanced variant
// (n/2)^(n-d) / C(n-1,d-1), which dominates there (they agree at d = n/2).
inline BoundValue lower_bound_independent(long long n, long long d) {
    if (d < 1 || d >= n) fail(ErrorKind::parameter, "independent-set bound needs 1 <= d < n");
    Int denom = binomial(n - 1, d - 1);
    if (2 * d >= n) {
        Rat exact = rat_pow(Rat(n, 2), n - d) / Rat(denom);
        return detail::make_bound("independent-set", BoundKind::lower, std::move(exact), true, "",
                                  "balanced-component variant");
    }
    Rat exact = Rat(int_pow(Int(d), d) * int_pow(Int(n), n - 2 * d), denom);
    return detail::make_bound("independent-set", BoundKind::lower, std::move(exact), true, "",
                              "component-product variant");
}

struct DeltaCurvePoint {
    double delta = 0.0;
    double C_delta = 0.0;  // upper-bound constant, meaningful on (0.1313, 1)
    double c_delta = 0.0;  // lower-bound constant, meaningful on (0, 1)
};

// C = (e/2) t and c = (1-d) t max(t, 1/2) with t = delta^(delta/(1-delta)).
inline DeltaCurvePoint delta_constants(double delta) {
    if (!(delta > 0.0 && delta < 1.0)) fail(ErrorKind::domain, "delta must lie strictly inside (0,1)");
    const double t = std::pow(delta, delta / (1.0 - delta));
    DeltaCurvePoint p;
    p.delta = delta;
    p.C_delta = std::numbers::e / 2.0 * t;
    p.c_delta = (1.0 - delta) * t * std::max(t, 0.5);
    return p;
}

struct PolynomialRegimePoint {
    long long d = 0;  // round(n - (k+1) ln n / ln ln n)
    BoundValue lower;
};

// The distance at which codes of size Omega(n^k) still exist, with the
// independent-set bound evaluated there.
inline PolynomialRegimePoint polynomial_regime_distance(long long n, int k) {
    if (k < 1) fail(ErrorKind::parameter, "k must be >= 1");
    if (n < 3 || std::log(std::log(static_cast<double>(n))) <= 0.0)
        fail(ErrorKind::domain, "ln ln n must be positive");
    if (n < 16) fail(ErrorKind::parameter, "regime defined for n >= 16");
    const double ln_n = std::log(static_cast<double>(n));
    const double gap = (k + 1) * ln_n / std::log(ln_n);
    PolynomialRegimePoint p;
    p.d = std::llround(static_cast<double>(n) - gap);
    p.lower = lower_bound_independent(n, p.d);
    return p;
}

namespace detail {

inline void add_witness(std::vector<BoundValue>& out, const std::string& family, long long size, bool applicable,
                        const std::string& condition) {
    out.push_back(make_bound("witness-" + family, BoundKind::lower, Rat(size), applicable, condition,
                             "explicit construction of this size"));
}

inline bool is_power_of(long long v, int base, int min_exp) {
    int e = 0;
    while (v % base == 0) {
        v /= base;
        ++e;
    }
    return v == 1 && e >= min_exp;
}

}  // namespace detail

// Every applicable bound for one (n,d), sorted lower-to-upper. Construction
// witnesses are included when requested. Raises an inconsistency alarm if the
// best applicable lower exceeds the best applicable upper: there would be no
// integer left for A(n,d).
inline std::vector<BoundValue> bounds_table(long long n, long long d, bool with_witnesses = true,
                                            int forest_exact_cap = kForestCountCap) {
    if (n < 2 || d < 1 || d > n - 1) fail(ErrorKind::parameter, "bounds table needs n >= 2, 1 <= d <= n-1");
    std::vector<BoundValue> out;

    if (d <= n - 2)
        out.push_back(first_upper_bound(n, d));
    out.push_back(sphere_packing_bound(n, d, forest_exact_cap));
    if (d > 1 && d <= n - 2) out.push_back(second_upper_bound(n, d));
    for (BoundValue& b : explicit_upper_bounds(n)) {
        const bool matches_d = (b.name.ends_with("n3") && d == n - 3) || (b.name.ends_with("n4") && d == n - 4) ||
                               (b.name.ends_with("n5") && d == n - 5);
        if (!matches_d || b.name.starts_with("subcode-cap")) continue;  // subcode caps bound a different quantity
        out.push_back(std::move(b));
    }
    if (d <= n - 2) out.push_back(leading_form_constant_gap(n, d));  // always flagged non-certifying

    out.push_back(lower_bound_independent(n, d));
    if (with_witnesses) {
        if (n >= 3) detail::add_witness(out, "stars", n, d <= n - 2, "d <= n-2");
        if (n >= 4) detail::add_witness(out, "ham-paths", n / 2, d <= n - 1, "d <= n-1");
        if (n >= 5) detail::add_witness(out, "paths-stars", n + n / 2, d <= n - 3, "d <= n-3");
        if (n % 3 == 0 && n / 3 >= 5 && is_prime(n / 3))
            detail::add_witness(out, "affine-n4", (n - 3) * (n - 9) / 9, d <= n - 4, "d <= n-4");
        if (n % 2 == 0 && n / 2 >= 9 && detail::is_power_of(n / 2, 3, 2))
            detail::add_witness(out, "cubic-n13", n * (n - 2) * (n - 2) / 32, d <= n - 13, "d <= n-13");
        if (n == 8) detail::add_witness(out, "bibd-8-28-5", 28, d <= 5, "d <= 5");
        if (n == 11) detail::add_witness(out, "furedi-11-35-8", 35, d <= 8, "d <= 8");
    }

    std::optional<Int> best_lower, best_upper;
    std::string lower_name, upper_name;
    for (const BoundValue& b : out) {
        if (!b.applicable) continue;
        if (b.kind == BoundKind::lower && (!best_lower || b.rounded > *best_lower)) {
            best_lower = b.rounded;
            lower_name = b.name;
        }
        if (b.kind == BoundKind::upper && (!best_upper || b.rounded < *best_upper)) {
            best_upper = b.rounded;
            upper_name = b.name;
        }
    }
    if (best_lower && best_upper && *best_lower > *best_upper)
        fail(ErrorKind::inconsistency, "bound sandwich violated at n=" + std::to_string(n) + ", d=" +
                                           std::to_string(d) + ": " + lower_name + " gives >= " +
                                           best_lower->str() + " but " + upper_name + " gives <= " +
                                           best_upper->str());

    std::stable_sort(out.begin(), out.end(), [](const BoundValue& a, const BoundValue& b) {
        if (a.kind != b.kind) return a.kind == BoundKind::lower;
        return a.rounded < b.rounded;
    });
    return out;
}

}  // namespace treecode
