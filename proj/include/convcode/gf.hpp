/// \file gf.hpp
/// Exact arithmetic in small finite fields GF(p^m), p^m <= 256.
///
/// Fields are immutable and canonicalized through a registry: Field::get()
/// returns one shared instance per (p, m, modulus), so pointer identity
/// coincides with structural equality.  All arithmetic is table backed
/// (log/antilog over a designated generator plus a full addition table),
/// which keeps the search kernels free of modular reductions.
///
/// Element text form: integers 0..p-1 for prime fields; "0", "1", "a",
/// "a^k" for extension fields, where "a" is the canonical generator.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace convcode {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

namespace detail {

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// dense coefficient vectors over Z_p, constant term first
inline std::vector<int> gfp_poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    const int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db) {
        const int da = static_cast<int>(a.size()) - 1;
        // b is monic, so the quotient coefficient is just the leading coefficient
        const int c = a.back();
        for (int i = 0; i <= db; ++i) {
            int& t = a[da - db + i];
            t = (t - c * b[i]) % p;
            if (t < 0) t += p;
        }
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

inline bool gfp_poly_irreducible(const std::vector<int>& f, int p) {
    const int m = static_cast<int>(f.size()) - 1;
    if (m < 1) return false;
    if (f[0] == 0) return m == 1;  // divisible by x
    // trial division by all monic polynomials of degree 1..m/2
    std::vector<int> d;
    for (int deg = 1; 2 * deg <= m; ++deg) {
        long long count = 1;
        for (int i = 0; i < deg; ++i) count *= p;
        for (long long code = 0; code < count; ++code) {
            d.assign(deg + 1, 0);
            d[deg] = 1;
            long long c = code;
            for (int i = 0; i < deg; ++i) {
                d[i] = static_cast<int>(c % p);
                c /= p;
            }
            if (gfp_poly_mod(f, d, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

/// A finite field GF(p^m).  Elements are canonical indices in [0, p^m):
/// the base-p digits of an index are the coefficients of the residue
/// polynomial (prime fields: the index is the integer itself).
class Field {
public:
    using Value = std::uint16_t;

    /// Field with the default modulus (for q in {4, 8, 16} the defaults are
    /// x^2+x+1, x^3+x+1 and x^4+x+1; otherwise the smallest primitive
    /// polynomial in coefficient encoding).
    static FieldPtr get(int p, int m) { return get_impl(p, m, nullptr); }

    /// Field with an explicit monic irreducible modulus of degree m
    /// (coefficients constant-first).  Prime fields take no modulus.
    static FieldPtr get(int p, int m, const std::vector<int>& modulus) {
        return get_impl(p, m, &modulus);
    }

    int characteristic() const { return p_; }
    int extension_degree() const { return m_; }
    int size() const { return q_; }
    bool is_prime_field() const { return m_ == 1; }
    const std::vector<int>& modulus() const { return modulus_; }
    Value generator() const { return gen_; }

    Value add(Value a, Value b) const { return add_[static_cast<size_t>(a) * q_ + b]; }
    Value neg(Value a) const { return neg_[a]; }
    Value sub(Value a, Value b) const { return add(a, neg(b)); }
    Value mul(Value a, Value b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    Value inv(Value a) const {
        if (a == 0) throw std::invalid_argument("field: inversion of zero");
        return exp_[q_ - 1 - log_[a]];
    }
    Value div(Value a, Value b) const { return mul(a, inv(b)); }

    /// discrete log with respect to the canonical generator, a != 0
    int log(Value a) const {
        if (a == 0) throw std::invalid_argument("field: log of zero");
        return log_[a];
    }
    /// generator^e, e may be any integer
    Value exp(long long e) const {
        if (q_ == 2) return 1;
        long long r = e % (q_ - 1);
        if (r < 0) r += q_ - 1;
        return exp_[r];
    }
    Value pow(Value a, long long e) const {
        if (a == 0) {
            if (e == 0) return 1;
            if (e < 0) throw std::invalid_argument("field: negative power of zero");
            return 0;
        }
        return exp(static_cast<long long>(log_[a]) * e);
    }

    std::string to_string(Value a) const;
    Value parse(std::string_view text) const;

    bool operator==(const Field& o) const {
        return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_;
    }

private:
    Field(int p, int m, std::vector<int> modulus);
    static FieldPtr get_impl(int p, int m, const std::vector<int>* modulus);
    static std::vector<int> default_modulus(int p, int m);

    Value slow_mul(Value a, Value b) const;  // used only while building tables

    int p_, m_, q_;
    std::vector<int> modulus_;
    Value gen_ = 1;
    std::vector<Value> add_;   // q*q
    std::vector<Value> neg_;   // q
    std::vector<int> log_;     // q, log_[0] unused
    std::vector<Value> exp_;   // 2(q-1), wraps once to absorb log sums
};

/// A value tagged with its field.  Mixing fields is an error, never an
/// implicit embedding.
class FieldElement {
public:
    FieldElement(const Field& f, Field::Value v) : f_(&f), v_(v) {
        if (v >= f.size()) throw std::invalid_argument("field element out of range");
    }

    const Field& field() const { return *f_; }
    Field::Value value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    std::string str() const { return f_->to_string(v_); }

    friend FieldElement operator+(FieldElement a, FieldElement b) {
        check(a, b);
        return {*a.f_, a.f_->add(a.v_, b.v_)};
    }
    friend FieldElement operator-(FieldElement a, FieldElement b) {
        check(a, b);
        return {*a.f_, a.f_->sub(a.v_, b.v_)};
    }
    friend FieldElement operator*(FieldElement a, FieldElement b) {
        check(a, b);
        return {*a.f_, a.f_->mul(a.v_, b.v_)};
    }
    friend FieldElement operator/(FieldElement a, FieldElement b) {
        check(a, b);
        return {*a.f_, a.f_->div(a.v_, b.v_)};
    }
    FieldElement operator-() const { return {*f_, f_->neg(v_)}; }
    FieldElement inverse() const { return {*f_, f_->inv(v_)}; }

    friend bool operator==(FieldElement a, FieldElement b) {
        check(a, b);
        return a.v_ == b.v_;
    }
    friend bool operator!=(FieldElement a, FieldElement b) { return !(a == b); }

private:
    static void check(const FieldElement& a, const FieldElement& b) {
        if (a.f_ != b.f_) throw std::invalid_argument("elements from different fields");
    }
    const Field* f_;
    Field::Value v_;
};

// ---------------------------------------------------------------------------

inline Field::Field(int p, int m, std::vector<int> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
    long long q = 1;
    for (int i = 0; i < m; ++i) {
        q *= p;
        if (q > 256) throw std::invalid_argument("field size exceeds 256");
    }
    q_ = static_cast<int>(q);

    if (m_ == 1) {
        if (!modulus_.empty())
            throw std::invalid_argument("prime fields take no modulus");
    } else {
        if (static_cast<int>(modulus_.size()) != m_ + 1 || modulus_.back() != 1)
            throw std::invalid_argument("modulus must be monic of degree m");
        for (int c : modulus_)
            if (c < 0 || c >= p_) throw std::invalid_argument("modulus coefficient out of range");
        if (!detail::gfp_poly_irreducible(modulus_, p_))
            throw std::invalid_argument("modulus is reducible");
    }

    neg_.resize(q_);
    add_.resize(static_cast<size_t>(q_) * q_);
    for (int a = 0; a < q_; ++a) {
        for (int b = a; b < q_; ++b) {
            int s = 0, pw = 1, x = a, y = b;
            for (int i = 0; i < m_; ++i) {
                s += ((x % p_ + y % p_) % p_) * pw;
                x /= p_;
                y /= p_;
                pw *= p_;
            }
            add_[static_cast<size_t>(a) * q_ + b] = static_cast<Value>(s);
            add_[static_cast<size_t>(b) * q_ + a] = static_cast<Value>(s);
        }
    }
    for (int a = 0; a < q_; ++a) {
        int s = 0, pw = 1, x = a;
        for (int i = 0; i < m_; ++i) {
            int d = x % p_;
            s += (d == 0 ? 0 : p_ - d) * pw;
            x /= p_;
            pw *= p_;
        }
        neg_[a] = static_cast<Value>(s);
    }

    // designated generator: x itself when primitive, else the first element
    // (by index) of full multiplicative order
    auto order_of = [&](Value a) {
        int ord = 1;
        Value t = a;
        while (t != 1) {
            t = slow_mul(t, a);
            ++ord;
            if (ord > q_) return -1;  // zero divisors cannot happen, safety net
        }
        return ord;
    };
    gen_ = 1;
    if (q_ > 2) {
        if (m_ >= 2 && order_of(static_cast<Value>(p_)) == q_ - 1) {
            gen_ = static_cast<Value>(p_);
        } else {
            for (int a = 2; a < q_; ++a) {
                if (order_of(static_cast<Value>(a)) == q_ - 1) {
                    gen_ = static_cast<Value>(a);
                    break;
                }
            }
        }
        if (gen_ == 1) throw std::logic_error("no generator found");
    }

    log_.assign(q_, 0);
    exp_.assign(2 * (q_ - 1), 1);
    Value t = 1;
    for (int e = 0; e < q_ - 1; ++e) {
        exp_[e] = t;
        exp_[e + q_ - 1] = t;
        log_[t] = e;
        t = slow_mul(t, gen_);
    }
    if (t != 1) throw std::logic_error("generator order mismatch");
}

inline Field::Value Field::slow_mul(Value a, Value b) const {
    if (m_ == 1) return static_cast<Value>((static_cast<int>(a) * b) % p_);
    std::vector<int> prod(2 * m_ - 1, 0);
    int x = a;
    for (int i = 0; i < m_; ++i, x /= p_) {
        const int da = x % p_;
        if (da == 0) continue;
        int y = b;
        for (int j = 0; j < m_; ++j, y /= p_) prod[i + j] = (prod[i + j] + da * (y % p_)) % p_;
    }
    prod = detail::gfp_poly_mod(std::move(prod), modulus_, p_);
    int s = 0, pw = 1;
    for (size_t i = 0; i < prod.size(); ++i) {
        s += prod[i] * pw;
        pw *= p_;
    }
    return static_cast<Value>(s);
}

inline std::vector<int> Field::default_modulus(int p, int m) {
    // smallest (in coefficient encoding) monic irreducible with x primitive;
    // reproduces x^2+x+1, x^3+x+1, x^4+x+1 for q = 4, 8, 16
    long long count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    for (long long code = 1; code < count; ++code) {
        std::vector<int> f(m + 1, 0);
        f[m] = 1;
        long long c = code;
        for (int i = 0; i < m; ++i) {
            f[i] = static_cast<int>(c % p);
            c /= p;
        }
        if (!detail::gfp_poly_irreducible(f, p)) continue;
        // order of x modulo f must be p^m - 1
        long long q = count;
        std::vector<int> x{0, 1};
        std::vector<int> t = x;
        long long ord = 1;
        while (!(t.size() == 1 && t[0] == 1)) {
            // t *= x
            t.insert(t.begin(), 0);
            t = detail::gfp_poly_mod(std::move(t), f, p);
            if (t.empty()) break;
            ++ord;
            if (ord > q) break;
        }
        if (ord == q - 1) return f;
    }
    throw std::logic_error("no primitive polynomial found");
}

inline FieldPtr Field::get_impl(int p, int m, const std::vector<int>* modulus) {
    if (!detail::is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
    std::vector<int> mod;
    if (modulus) {
        mod = *modulus;
    } else if (m >= 2) {
        mod = default_modulus(p, m);
    }

    using Key = std::tuple<int, int, std::vector<int>>;
    static std::map<Key, FieldPtr> registry;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    Key key{p, m, mod};
    auto it = registry.find(key);
    if (it != registry.end()) return it->second;
    FieldPtr f(new Field(p, m, mod));
    registry.emplace(std::move(key), f);
    return f;
}

inline std::string Field::to_string(Value a) const {
    if (m_ == 1 || a <= 1) return std::to_string(a);
    const int e = log_[a];
    if (e == 1) return "a";
    return "a^" + std::to_string(e);
}

inline Field::Value Field::parse(std::string_view text) const {
    if (text.empty()) throw std::invalid_argument("empty field element");
    if (text[0] >= '0' && text[0] <= '9') {
        int v = 0;
        for (char c : text) {
            if (c < '0' || c > '9') throw std::invalid_argument("bad field element: " + std::string(text));
            v = v * 10 + (c - '0');
            if (v >= 1000) break;
        }
        if (v >= p_)
            throw std::invalid_argument("field constant out of range: " + std::string(text));
        return static_cast<Value>(v);
    }
    if (text[0] != 'a' || m_ == 1)
        throw std::invalid_argument("bad field element: " + std::string(text));
    if (text.size() == 1) return gen_;
    if (text.size() < 3 || text[1] != '^')
        throw std::invalid_argument("bad field element: " + std::string(text));
    long long e = 0;
    for (size_t i = 2; i < text.size(); ++i) {
        char c = text[i];
        if (c < '0' || c > '9') throw std::invalid_argument("bad field element: " + std::string(text));
        e = e * 10 + (c - '0');
        if (e > 1000000) throw std::invalid_argument("exponent too large");
    }
    return exp(e);
}

/// Canonical shared handle for a field reference (the registry guarantees
/// one instance per structure, so this returns the owning pointer).
inline FieldPtr field_ptr(const Field& f) {
    return f.is_prime_field() ? Field::get(f.characteristic(), 1)
                              : Field::get(f.characteristic(), f.extension_degree(), f.modulus());
}

/// q = p^m with p prime?  Optionally reports p and m.
inline bool is_prime_power(long long q, long long* p_out = nullptr, int* m_out = nullptr) {
    if (q < 2) return false;
    long long p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (p * p > q) p = q;
    long long t = q;
    int m = 0;
    while (t % p == 0) {
        t /= p;
        ++m;
    }
    if (t != 1) return false;
    if (p_out) *p_out = p;
    if (m_out) *m_out = m;
    return true;
}

}  // namespace convcode
