/// \file skew.hpp
/// The group algebra A = F[x]/(x^n - 1) with gcd(n, q) = 1, its F-algebra
/// automorphisms, the skew polynomial ring A[z;sigma] with the twist rule
/// a z = z sigma(a), sigma-circulants, and construction/verification of
/// sigma-cyclic convolutional codes from principal left ideals.
///
/// Coefficients of skew polynomials are stored on the LEFT of the z powers,
/// i.e. f = sum_j z^j a_j, matching the multiplication rule
///     (sum_j z^j a_j)(sum_l z^l b_l) = sum_t z^t sum_{j+l=t} sigma^l(a_j) b_l.

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "io.hpp"
#include "polymat.hpp"

namespace convcode {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// A = F[x]/(x^n - 1); elements are length-n coefficient vectors.
class Algebra {
public:
    static AlgebraPtr get(const FieldPtr& field, int n) {
        if (n < 1) throw std::invalid_argument("algebra: n must be >= 1");
        if (std::gcd(n, field->characteristic()) != 1)
            throw std::invalid_argument("algebra: n and q must be coprime");
        using Key = std::pair<const Field*, int>;
        static std::map<Key, AlgebraPtr> registry;
        static std::mutex mtx;
        std::lock_guard<std::mutex> lock(mtx);
        Key key{field.get(), n};
        auto it = registry.find(key);
        if (it != registry.end()) return it->second;
        AlgebraPtr a(new Algebra(field, n));
        registry.emplace(key, a);
        return a;
    }

    const Field& field() const { return *f_; }
    int n() const { return n_; }

private:
    Algebra(FieldPtr f, int n) : f_holder_(std::move(f)), f_(f_holder_.get()), n_(n) {}
    FieldPtr f_holder_;
    const Field* f_;
    int n_;
};

class AlgebraElement {
public:
    AlgebraElement(const Algebra& alg, std::vector<Field::Value> coeffs)
        : a_(&alg), c_(std::move(coeffs)) {
        if (static_cast<int>(c_.size()) != alg.n())
            throw std::invalid_argument("algebra element: wrong length");
    }
    static AlgebraElement zero(const Algebra& alg) {
        return {alg, std::vector<Field::Value>(alg.n(), 0)};
    }
    static AlgebraElement one(const Algebra& alg) {
        auto e = zero(alg);
        e.c_[0] = 1;
        return e;
    }
    /// x^i (exponent reduced mod n)
    static AlgebraElement x_power(const Algebra& alg, long long i) {
        auto e = zero(alg);
        long long r = i % alg.n();
        if (r < 0) r += alg.n();
        e.c_[static_cast<size_t>(r)] = 1;
        return e;
    }

    const Algebra& algebra() const { return *a_; }
    const std::vector<Field::Value>& coeffs() const { return c_; }
    Field::Value coeff(int i) const { return c_[i]; }

    bool is_zero() const {
        for (auto v : c_)
            if (v) return false;
        return true;
    }

    friend AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
        check(x, y);
        const Field& f = x.a_->field();
        auto out = x;
        for (int i = 0; i < x.a_->n(); ++i) out.c_[i] = f.add(out.c_[i], y.c_[i]);
        return out;
    }
    friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
        check(x, y);
        const Field& f = x.a_->field();
        const int n = x.a_->n();
        auto out = zero(*x.a_);
        for (int i = 0; i < n; ++i) {
            if (x.c_[i] == 0) continue;
            for (int j = 0; j < n; ++j) {
                if (y.c_[j] == 0) continue;
                int t = i + j;
                if (t >= n) t -= n;  // reduction mod x^n - 1
                out.c_[t] = f.add(out.c_[t], f.mul(x.c_[i], y.c_[j]));
            }
        }
        return out;
    }
    AlgebraElement scaled(Field::Value s) const {
        const Field& f = a_->field();
        auto out = *this;
        for (auto& v : out.c_) v = f.mul(v, s);
        return out;
    }
    AlgebraElement pow(long long e) const {
        if (e < 0) throw std::invalid_argument("negative algebra power");
        auto acc = one(*a_);
        auto base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
        return x.a_ == y.a_ && x.c_ == y.c_;
    }
    friend bool operator!=(const AlgebraElement& x, const AlgebraElement& y) { return !(x == y); }

    std::string str() const {
        std::vector<Field::Value> c(c_.begin(), c_.end());
        return Poly(a_->field(), c).str('x');
    }

private:
    static void check(const AlgebraElement& x, const AlgebraElement& y) {
        if (x.a_ != y.a_) throw std::invalid_argument("elements from different algebras");
    }
    const Algebra* a_;
    std::vector<Field::Value> c_;
};

/// Parse an element of A from the x-polynomial grammar ("1+x^2", "a^2*x").
inline AlgebraElement parse_algebra_element(const Algebra& alg, std::string_view text) {
    const Poly p = parse_poly(alg.field(), text, 'x');
    auto e = AlgebraElement::zero(alg);
    for (int i = 0; i <= p.degree(); ++i)
        if (p.coeff(i) != 0)
            e = e + AlgebraElement::x_power(alg, i).scaled(p.coeff(i));
    return e;
}

/// sigma(x) = a determines an F-algebra automorphism iff 1, a, ..., a^{n-1}
/// are linearly independent over F and a^n = 1.
inline bool validate_automorphism(const AlgebraElement& a) {
    const Algebra& alg = a.algebra();
    const int n = alg.n();
    RowSpace space(alg.field(), n);
    auto p = AlgebraElement::one(alg);
    for (int i = 0; i < n; ++i) {
        if (!space.add(p.coeffs())) return false;
        p = p * a;
    }
    return p == AlgebraElement::one(alg);  // p = a^n here
}

/// An automorphism of A, determined by the single value sigma(x).
class Automorphism {
public:
    explicit Automorphism(AlgebraElement image_of_x) : a_(std::move(image_of_x)) {
        if (!validate_automorphism(a_)) throw std::invalid_argument("not an automorphism");
        const Algebra& alg = a_.algebra();
        xpow_.reserve(alg.n());
        auto p = AlgebraElement::one(alg);
        for (int i = 0; i < alg.n(); ++i) {
            xpow_.push_back(p);
            p = p * a_;
        }
    }

    const Algebra& algebra() const { return a_.algebra(); }
    const AlgebraElement& image_of_x() const { return a_; }
    bool is_identity() const { return a_ == AlgebraElement::x_power(a_.algebra(), 1); }

    /// the algebra map sum f_i x^i -> sum f_i sigma(x)^i
    AlgebraElement operator()(const AlgebraElement& v) const {
        auto out = AlgebraElement::zero(a_.algebra());
        for (int i = 0; i < a_.algebra().n(); ++i)
            if (v.coeff(i) != 0) out = out + xpow_[i].scaled(v.coeff(i));
        return out;
    }
    AlgebraElement apply_power(AlgebraElement v, int l) const {
        for (int i = 0; i < l; ++i) v = (*this)(v);
        return v;
    }

    friend bool operator==(const Automorphism& x, const Automorphism& y) { return x.a_ == y.a_; }

private:
    AlgebraElement a_;
    std::vector<AlgebraElement> xpow_;  // sigma(x^i) = sigma(x)^i
};

/// All automorphism images sigma(x), in canonical (coefficient encoding)
/// order.  Brute force over q^n candidates with early-exit rank checks.
inline std::vector<AlgebraElement> enumerate_automorphisms(const Algebra& alg) {
    const int n = alg.n();
    const int q = alg.field().size();
    long long total = 1;
    for (int i = 0; i < n; ++i) {
        total *= q;
        if (total > (1 << 20)) throw std::invalid_argument("automorphism search space too large");
    }
    std::vector<AlgebraElement> out;
    std::vector<Field::Value> digits(n);
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        for (int i = 0; i < n; ++i) {
            digits[i] = static_cast<Field::Value>(c % q);
            c /= q;
        }
        AlgebraElement a(alg, digits);
        if (validate_automorphism(a)) out.push_back(std::move(a));
    }
    return out;
}

/// Element of A[z;sigma] with left coefficients: f = sum_j z^j a_j.
class SkewPoly {
public:
    explicit SkewPoly(std::shared_ptr<const Automorphism> sigma) : sigma_(std::move(sigma)) {}
    SkewPoly(std::shared_ptr<const Automorphism> sigma, std::vector<AlgebraElement> coeffs)
        : sigma_(std::move(sigma)), c_(std::move(coeffs)) {
        for (const auto& a : c_)
            if (&a.algebra() != &sigma_->algebra())
                throw std::invalid_argument("skew coefficient from wrong algebra");
        strip();
    }

    const Automorphism& sigma() const { return *sigma_; }
    std::shared_ptr<const Automorphism> sigma_ptr() const { return sigma_; }
    const Algebra& algebra() const { return sigma_->algebra(); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    AlgebraElement coeff(int j) const {
        if (j < 0 || j > degree()) return AlgebraElement::zero(algebra());
        return c_[j];
    }

    friend SkewPoly operator+(const SkewPoly& x, const SkewPoly& y) {
        check(x, y);
        std::vector<AlgebraElement> c;
        const int d = std::max(x.degree(), y.degree());
        for (int j = 0; j <= d; ++j) c.push_back(x.coeff(j) + y.coeff(j));
        return SkewPoly(x.sigma_, std::move(c));
    }

    /// the twisted convolution sum_t z^t sum_{j+l=t} sigma^l(a_j) b_l
    friend SkewPoly operator*(const SkewPoly& x, const SkewPoly& y) {
        check(x, y);
        if (x.is_zero() || y.is_zero()) return SkewPoly(x.sigma_);
        const Algebra& alg = x.algebra();
        std::vector<AlgebraElement> c(x.degree() + y.degree() + 1, AlgebraElement::zero(alg));
        for (int j = 0; j <= x.degree(); ++j)
            for (int l = 0; l <= y.degree(); ++l)
                c[j + l] = c[j + l] + x.sigma_->apply_power(x.c_[j], l) * y.c_[l];
        return SkewPoly(x.sigma_, std::move(c));
    }

    friend bool operator==(const SkewPoly& x, const SkewPoly& y) {
        return x.sigma_->image_of_x() == y.sigma_->image_of_x() && x.c_ == y.c_;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (int j = 0; j <= degree(); ++j) {
            if (c_[j].is_zero()) continue;
            if (!out.empty()) out += " + ";
            if (j == 0) {
                out += c_[j].str();
            } else {
                out += "z";
                if (j > 1) out += "^" + std::to_string(j);
                out += "*(" + c_[j].str() + ")";
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    static void check(const SkewPoly& x, const SkewPoly& y) {
        if (&x.algebra() != &y.algebra() || !(x.sigma_->image_of_x() == y.sigma_->image_of_x()))
            throw std::invalid_argument("skew polynomials with different twists");
    }
    void strip() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::shared_ptr<const Automorphism> sigma_;
    std::vector<AlgebraElement> c_;
};

/// p: F[z]^n -> A[z;sigma], an isomorphism of left F[z]-modules.
inline SkewPoly p_map(const std::vector<Poly>& v, std::shared_ptr<const Automorphism> sigma) {
    const Algebra& alg = sigma->algebra();
    const int n = alg.n();
    if (static_cast<int>(v.size()) != n) throw std::invalid_argument("p_map: wrong vector length");
    int d = kNegInfDegree;
    for (const auto& p : v) d = deg_max(d, p.degree());
    std::vector<AlgebraElement> c;
    for (int j = 0; d != kNegInfDegree && j <= d; ++j) {
        std::vector<Field::Value> coeffs(n);
        for (int t = 0; t < n; ++t) coeffs[t] = v[t].coeff(j);
        c.emplace_back(alg, std::move(coeffs));
    }
    return SkewPoly(std::move(sigma), std::move(c));
}

/// p^{-1}: coefficient transport back to F[z]^n.
inline std::vector<Poly> p_inverse(const SkewPoly& g) {
    const Algebra& alg = g.algebra();
    const Field& f = alg.field();
    const int n = alg.n();
    std::vector<Poly> out;
    out.reserve(n);
    for (int t = 0; t < n; ++t) {
        std::vector<Field::Value> c(std::max(g.degree() + 1, 0), 0);
        for (int j = 0; j <= g.degree(); ++j) c[j] = g.coeff(j).coeff(t);
        out.emplace_back(f, std::move(c));
    }
    return out;
}

/// left multiplication by a plain algebra element: a * g = sum_l z^l sigma^l(a) b_l
inline SkewPoly left_mul(const AlgebraElement& a, const SkewPoly& g) {
    return SkewPoly(g.sigma_ptr(), {a}) * g;
}

/// The sigma-circulant M^sigma(g): row i is p^{-1}(x^i g).  It satisfies
/// p(u M^sigma(g)) = p(u) g for all u.
inline PolyMatrix sigma_circulant(const SkewPoly& g) {
    const Algebra& alg = g.algebra();
    const int n = alg.n();
    std::vector<std::vector<Poly>> rows;
    rows.reserve(n);
    for (int i = 0; i < n; ++i)
        rows.push_back(p_inverse(left_mul(AlgebraElement::x_power(alg, i), g)));
    return PolyMatrix::from_rows(alg.field(), rows);
}

/// Generator matrix of the left ideal <g>: process the circulant rows
/// p^{-1}(g), p^{-1}(xg), ... in order and keep each row that is not an
/// F[z]-combination of the rows already kept.  Returns nullopt when the
/// resulting matrix is not right invertible (the ideal is not the
/// polynomial part of a code).
inline std::optional<PolyMatrix> ideal_generator_matrix(const SkewPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("zero generator polynomial");
    const Algebra& alg = g.algebra();
    std::vector<std::vector<Poly>> kept;
    std::vector<std::vector<Poly>> echelon;
    for (int i = 0; i < alg.n(); ++i) {
        auto row = p_inverse(left_mul(AlgebraElement::x_power(alg, i), g));
        if (!kept.empty() && in_row_module(row, echelon)) continue;
        bool zero = true;
        for (const auto& p : row) zero = zero && p.is_zero();
        if (zero) continue;
        kept.push_back(std::move(row));
        echelon = row_module_echelon(kept);
    }
    if (kept.empty()) return std::nullopt;
    PolyMatrix G = PolyMatrix::from_rows(alg.field(), kept);
    if (!right_inverse(G)) return std::nullopt;
    return G;
}

/// Is the row module of G closed under the x-action p^{-1}(x p(v))?
/// Closure under z is automatic for F[z]-modules, so this decides
/// sigma-cyclicity of the code generated by G.
inline bool is_sigma_cyclic(const PolyMatrix& G, std::shared_ptr<const Automorphism> sigma) {
    const Algebra& alg = sigma->algebra();
    if (G.cols() != alg.n()) throw std::invalid_argument("matrix width does not match algebra");
    if (&G.field() != &alg.field()) throw std::invalid_argument("field mismatch");
    auto H = right_inverse(G);
    if (!H) throw std::invalid_argument("matrix is not right invertible");
    const auto x = AlgebraElement::x_power(alg, 1);
    for (int i = 0; i < G.rows(); ++i) {
        const auto shifted = p_inverse(left_mul(x, p_map(G.row(i), sigma)));
        if (!membership(shifted, G, *H)) return false;
    }
    return true;
}

/// Parse a skew polynomial: terms P(x) and z^j*(P(x)) joined by '+'.
inline SkewPoly parse_skew_poly(std::shared_ptr<const Automorphism> sigma, std::string_view text) {
    const Algebra& alg = sigma->algebra();
    const std::string s = detail::strip_ws(text);
    if (s.empty()) throw std::invalid_argument("empty skew polynomial");
    std::map<int, AlgebraElement> parts;
    for (const auto& term : detail::split_terms(s)) {
        if (term.empty()) throw std::invalid_argument("empty term in skew polynomial");
        int j = 0;
        std::string inner = term;
        if (term[0] == 'z') {
            size_t pos = 1;
            bool has_exp = false;
            if (pos < term.size() && term[pos] == '^') {
                size_t star = term.find('*', pos);
                if (star == std::string::npos) throw std::invalid_argument("bad skew term: " + term);
                j = detail::parse_exponent(std::string_view(term).substr(pos + 1, star - pos - 1));
                has_exp = true;
                pos = star;
            }
            if (pos >= term.size() || term[pos] != '*') throw std::invalid_argument("bad skew term: " + term);
            if (!has_exp) j = 1;
            ++pos;
            if (pos >= term.size() || term[pos] != '(' || term.back() != ')')
                throw std::invalid_argument("skew term needs parentheses: " + term);
            inner = term.substr(pos + 1, term.size() - pos - 2);
        }
        auto elem = parse_algebra_element(alg, inner);
        auto it = parts.find(j);
        if (it == parts.end())
            parts.emplace(j, elem);
        else
            it->second = it->second + elem;
    }
    int maxj = 0;
    for (const auto& [j, e] : parts) maxj = std::max(maxj, j);
    std::vector<AlgebraElement> coeffs(maxj + 1, AlgebraElement::zero(alg));
    for (const auto& [j, e] : parts) coeffs[j] = e;
    return SkewPoly(std::move(sigma), std::move(coeffs));
}

}  // namespace convcode
