#pragma once

#include <memory>
#include <string>
#include <vector>

#include "treecode/errors.hpp"

namespace treecode {

inline bool is_prime(long long v) {
    if (v < 2) return false;
    for (long long f = 2; f * f <= v; ++f)
        if (v % f == 0) return false;
    return true;
}

class FieldElement;

// GF(p^m) with dense exp/log tables. The residue class of x is required to be
// a primitive element, so dlog parity queries come straight off the tables.
// Fields here stay tiny (a few hundred elements), so O(q) tables are free.
class Field {
  public:
    // F_p represented modulo (x - g) with g the smallest primitive root, so
    // the residue of x is itself a primitive element.
    static Field prime(int p) {
        if (!is_prime(p)) fail(ErrorKind::parameter, "characteristic " + std::to_string(p) + " is not prime");
        if (p == 2) fail(ErrorKind::parameter, "characteristic 2 is out of scope");
        for (int g = 2; g < p; ++g) {
            Field f = try_build(p, 1, {mod(-g, p), 1});
            if (f.ok()) return f;
        }
        fail(ErrorKind::domain, "no primitive root found (unreachable for prime p)");
    }

    // GF(3^m). Candidate moduli are order-checked at construction; any entry
    // whose root is not primitive is replaced by searching monic polynomials
    // in ascending encoding.
    static Field gf3(int m) {
        if (m < 1 || m > 5) fail(ErrorKind::parameter, "GF(3^m) supported for 1 <= m <= 5");
        static const std::vector<std::vector<int>> candidates = {
            {0, 1},              // x
            {2, 1, 1},           // x^2 + x + 2
            {1, 2, 0, 1},        // x^3 + 2x + 1
            {2, 1, 0, 0, 1},     // x^4 + x + 2
            {1, 2, 0, 0, 0, 1},  // x^5 + 2x + 1
        };
        Field f = try_build(3, m, candidates[m - 1]);
        if (f.ok()) return f;
        long long count = 1;
        for (int i = 0; i < m; ++i) count *= 3;
        for (long long enc = 0; enc < count; ++enc) {
            std::vector<int> coeffs(m + 1, 0);
            long long rem = enc;
            for (int i = 0; i < m; ++i) {
                coeffs[i] = static_cast<int>(rem % 3);
                rem /= 3;
            }
            coeffs[m] = 1;
            Field g = try_build(3, m, coeffs);
            if (g.ok()) return g;
        }
        fail(ErrorKind::domain, "no primitive modulus for GF(3^" + std::to_string(m) + ")");
    }

    // Explicit modulus; rejected unless irreducible with primitive root x.
    static Field with_modulus(int p, int m, std::vector<int> modulus) {
        if (!is_prime(p)) fail(ErrorKind::parameter, "characteristic must be prime");
        Field f = try_build(p, m, std::move(modulus));
        if (!f.ok())
            fail(ErrorKind::parameter, "modulus is not irreducible with primitive residue x over F_" +
                                           std::to_string(p));
        return f;
    }

    int p() const { return data_->p; }
    int m() const { return data_->m; }
    int q() const { return data_->q; }
    const std::vector<int>& modulus() const { return data_->modulus; }

    FieldElement element(int repr) const;
    FieldElement zero() const;
    FieldElement one() const;
    FieldElement omega() const;  // the residue of x; primitive by construction
    FieldElement from_int(long long value) const;

    // "GF(p^m)/[c0,c1,...,cm]" for diagnostics
    std::string to_string() const {
        std::string s = "GF(" + std::to_string(p()) + "^" + std::to_string(m()) + ")/[";
        for (std::size_t i = 0; i < data_->modulus.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(data_->modulus[i]);
        }
        return s + "]";
    }

    friend bool operator==(const Field& a, const Field& b) {
        return a.data_ == b.data_ ||
               (a.p() == b.p() && a.m() == b.m() && a.data_->modulus == b.data_->modulus);
    }

  private:
    struct Data {
        int p = 0, m = 0, q = 0;
        std::vector<int> modulus;   // m+1 coefficients, constant term first, monic
        std::vector<int> exp_table; // exp_table[k] = repr of omega^k, k in [0, q-1)
        std::vector<int> log_table; // log_table[repr] for nonzero repr; -1 at 0
    };

    Field() = default;
    bool ok() const { return data_ != nullptr; }

    static int mod(int a, int p) { return ((a % p) + p) % p; }

    static std::vector<int> decode_poly(int repr, int p, int m) {
        std::vector<int> c(m, 0);
        for (int i = 0; i < m; ++i) {
            c[i] = repr % p;
            repr /= p;
        }
        return c;
    }

    static int encode_poly(const std::vector<int>& c, int p) {
        int repr = 0;
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) repr = repr * p + c[i];
        return repr;
    }

    // (poly * x) mod modulus, coefficient vectors of length m
    static void mul_by_x(std::vector<int>& c, const std::vector<int>& modulus, int p) {
        const int m = static_cast<int>(c.size());
        int carry = c[m - 1];
        for (int i = m - 1; i > 0; --i) c[i] = c[i - 1];
        c[0] = 0;
        if (carry != 0)
            for (int i = 0; i < m; ++i) c[i] = mod(c[i] - carry * modulus[i], p);
    }

    static bool poly_divides(const std::vector<int>& div, const std::vector<int>& target, int p) {
        std::vector<int> rem = target;
        const int dd = static_cast<int>(div.size()) - 1;
        for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
            if (rem[i] == 0) continue;
            // div is monic: subtract rem[i] * x^(i-dd) * div
            int factor = rem[i];
            for (int j = 0; j <= dd; ++j) rem[i - dd + j] = mod(rem[i - dd + j] - factor * div[j], p);
        }
        for (int i = 0; i < dd; ++i)
            if (rem[i] != 0) return false;
        return true;
    }

    static bool is_irreducible(const std::vector<int>& modulus, int p, int m) {
        if (m == 1) return true;
        // trial division by every monic polynomial of degree 1..m/2
        for (int deg = 1; deg * 2 <= m; ++deg) {
            long long count = 1;
            for (int i = 0; i < deg; ++i) count *= p;
            for (long long enc = 0; enc < count; ++enc) {
                std::vector<int> div(deg + 1, 0);
                long long rem = enc;
                for (int i = 0; i < deg; ++i) {
                    div[i] = static_cast<int>(rem % p);
                    rem /= p;
                }
                div[deg] = 1;
                if (poly_divides(div, modulus, p)) return false;
            }
        }
        return true;
    }

    // empty Field (ok()==false) if modulus is unusable
    static Field try_build(int p, int m, std::vector<int> modulus) {
        if (static_cast<int>(modulus.size()) != m + 1 || modulus[m] != 1) return Field();
        for (int c : modulus)
            if (c < 0 || c >= p) return Field();
        if (!is_irreducible(modulus, p, m)) return Field();

        auto data = std::make_shared<Data>();
        data->p = p;
        data->m = m;
        data->q = 1;
        for (int i = 0; i < m; ++i) data->q *= p;
        data->modulus = std::move(modulus);

        // walk powers of x; primitive iff we return to 1 after exactly q-1 steps
        data->exp_table.assign(data->q - 1, 0);
        data->log_table.assign(data->q, -1);
        std::vector<int> acc(m, 0);
        acc[0] = 1;
        for (int k = 0; k < data->q - 1; ++k) {
            int repr = encode_poly(acc, p);
            if (repr == 1 && k > 0) return Field();  // order < q-1: not primitive
            data->exp_table[k] = repr;
            data->log_table[repr] = k;
            mul_by_x(acc, data->modulus, p);
        }
        if (encode_poly(acc, p) != 1) return Field();  // reducible slipped through

        Field f;
        f.data_ = std::move(data);
        return f;
    }

    friend class FieldElement;
    std::shared_ptr<const Data> data_;
};

class FieldElement {
  public:
    FieldElement(Field field, int repr) : field_(std::move(field)), repr_(repr) {
        if (repr_ < 0 || repr_ >= field_.q()) fail(ErrorKind::domain, "element repr out of range");
    }

    const Field& field() const { return field_; }
    int repr() const { return repr_; }
    bool is_zero() const { return repr_ == 0; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        a.check_same(b);
        const int p = a.field_.p();
        int ra = a.repr_, rb = b.repr_, out = 0, scale = 1;
        for (int i = 0; i < a.field_.m(); ++i) {
            out += ((ra % p + rb % p) % p) * scale;
            ra /= p;
            rb /= p;
            scale *= p;
        }
        return FieldElement(a.field_, out);
    }

    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

    FieldElement operator-() const {
        const int p = field_.p();
        int r = repr_, out = 0, scale = 1;
        for (int i = 0; i < field_.m(); ++i) {
            out += ((p - r % p) % p) * scale;
            r /= p;
            scale *= p;
        }
        return FieldElement(field_, out);
    }

    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) { return a.times(b); }

    FieldElement inverse() const {
        if (is_zero()) fail(ErrorKind::domain, "inverse of zero");
        const auto& d = *field_.data_;
        int k = (d.q - 1 - d.log_table[repr_]) % (d.q - 1);
        return FieldElement(field_, d.exp_table[k]);
    }

    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

    FieldElement pow(long long e) const {
        if (is_zero()) {
            if (e < 0) fail(ErrorKind::domain, "negative power of zero");
            return e == 0 ? FieldElement(field_, 1) : *this;
        }
        const auto& d = *field_.data_;
        long long ord = d.q - 1;
        long long k = (static_cast<long long>(d.log_table[repr_]) * (e % ord)) % ord;
        if (k < 0) k += ord;
        return FieldElement(field_, d.exp_table[static_cast<int>(k)]);
    }

    // dlog base omega, in [0, q-1)
    int discrete_log() const {
        if (is_zero()) fail(ErrorKind::domain, "discrete log of zero");
        return field_.data_->log_table[repr_];
    }

    bool is_square() const { return discrete_log() % 2 == 0; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field_ == b.field_ && a.repr_ == b.repr_;
    }

  private:
    void check_same(const FieldElement& other) const {
        if (!(field_ == other.field_))
            fail(ErrorKind::parameter, "elements of different fields: " + field_.to_string() + " vs " +
                                           other.field_.to_string());
    }

    FieldElement times(const FieldElement& b) const {
        check_same(b);
        if (is_zero() || b.is_zero()) return FieldElement(field_, 0);
        const auto& d = *field_.data_;
        int k = d.log_table[repr_] + d.log_table[b.repr_];
        if (k >= d.q - 1) k -= d.q - 1;
        return FieldElement(field_, d.exp_table[k]);
    }

    Field field_;
    int repr_;
};

inline FieldElement Field::element(int repr) const { return FieldElement(*this, repr); }
inline FieldElement Field::zero() const { return FieldElement(*this, 0); }
inline FieldElement Field::one() const { return FieldElement(*this, 1); }
inline FieldElement Field::omega() const { return FieldElement(*this, data_->exp_table[1 % (q() - 1)]); }
inline FieldElement Field::from_int(long long value) const {
    long long r = value % p();
    if (r < 0) r += p();
    return FieldElement(*this, static_cast<int>(r));
}

// Horner evaluation map over all q elements; true iff injective.
// coeffs[i] multiplies x^i; polynomial degree must stay below q.
inline bool is_permutation_polynomial(const Field& field, const std::vector<FieldElement>& coeffs) {
    if (coeffs.size() > static_cast<std::size_t>(field.q()))
        fail(ErrorKind::parameter, "polynomial degree must be below q");
    for (const FieldElement& c : coeffs)
        if (!(c.field() == field)) fail(ErrorKind::parameter, "coefficient from a different field");
    std::vector<bool> seen(field.q(), false);
    for (int x = 0; x < field.q(); ++x) {
        FieldElement xe = field.element(x);
        FieldElement acc = field.zero();
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * xe + *it;
        if (seen[acc.repr()]) return false;
        seen[acc.repr()] = true;
    }
    return true;
}

}  // namespace treecode
