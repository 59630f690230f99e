/// \file poly.hpp
/// Univariate polynomials in z over GF(q).

#pragma once

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gf.hpp"

namespace convcode {

/// deg 0 = -infinity sentinel
inline constexpr int kNegInfDegree = std::numeric_limits<int>::min();

inline int deg_max(int a, int b) { return a > b ? a : b; }
inline int deg_sum(int a, int b) {
    if (a == kNegInfDegree || b == kNegInfDegree) return kNegInfDegree;
    return a + b;
}

class Poly {
public:
    explicit Poly(const Field& f) : f_(&f) {}
    Poly(const Field& f, std::vector<Field::Value> coeffs) : f_(&f), c_(std::move(coeffs)) {
        for (auto v : c_)
            if (v >= f.size()) throw std::invalid_argument("coefficient out of range");
        strip();
    }

    static Poly zero(const Field& f) { return Poly(f); }
    static Poly constant(const Field& f, Field::Value v) { return Poly(f, {v}); }
    static Poly one(const Field& f) { return constant(f, 1); }
    static Poly monomial(const Field& f, Field::Value coeff, int power) {
        if (power < 0) throw std::invalid_argument("negative power");
        std::vector<Field::Value> c(power + 1, 0);
        c[power] = coeff;
        return Poly(f, std::move(c));
    }

    const Field& field() const { return *f_; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return c_.empty() ? kNegInfDegree : static_cast<int>(c_.size()) - 1; }

    Field::Value coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
        return c_[i];
    }
    Field::Value leading() const {
        if (c_.empty()) throw std::invalid_argument("leading coefficient of zero");
        return c_.back();
    }

    /// number of nonzero coefficients
    int weight() const {
        int w = 0;
        for (auto v : c_)
            if (v != 0) ++w;
        return w;
    }

    friend Poly operator+(const Poly& x, const Poly& y) {
        check(x, y);
        const Field& f = *x.f_;
        std::vector<Field::Value> c(std::max(x.c_.size(), y.c_.size()), 0);
        for (size_t i = 0; i < c.size(); ++i) c[i] = f.add(x.coeff(static_cast<int>(i)), y.coeff(static_cast<int>(i)));
        return Poly(f, std::move(c));
    }
    friend Poly operator-(const Poly& x, const Poly& y) {
        check(x, y);
        const Field& f = *x.f_;
        std::vector<Field::Value> c(std::max(x.c_.size(), y.c_.size()), 0);
        for (size_t i = 0; i < c.size(); ++i) c[i] = f.sub(x.coeff(static_cast<int>(i)), y.coeff(static_cast<int>(i)));
        return Poly(f, std::move(c));
    }
    friend Poly operator*(const Poly& x, const Poly& y) {
        check(x, y);
        const Field& f = *x.f_;
        if (x.is_zero() || y.is_zero()) return Poly(f);
        std::vector<Field::Value> c(x.c_.size() + y.c_.size() - 1, 0);
        for (size_t i = 0; i < x.c_.size(); ++i) {
            if (x.c_[i] == 0) continue;
            for (size_t j = 0; j < y.c_.size(); ++j)
                c[i + j] = f.add(c[i + j], f.mul(x.c_[i], y.c_[j]));
        }
        return Poly(f, std::move(c));
    }

    Poly scaled(Field::Value s) const {
        std::vector<Field::Value> c(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) c[i] = f_->mul(c_[i], s);
        return Poly(*f_, std::move(c));
    }

    /// multiply by z^s
    Poly shifted(int s) const {
        if (is_zero()) return *this;
        std::vector<Field::Value> c(c_.size() + s, 0);
        for (size_t i = 0; i < c_.size(); ++i) c[i + s] = c_[i];
        return Poly(*f_, std::move(c));
    }

    /// keep coefficients of z^0 .. z^maxdeg
    Poly truncated(int maxdeg) const {
        if (maxdeg < 0) return Poly(*f_);
        std::vector<Field::Value> c(c_.begin(), c_.begin() + std::min(c_.size(), static_cast<size_t>(maxdeg) + 1));
        return Poly(*f_, std::move(c));
    }

    /// quotient and remainder, deg r < deg d
    friend std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
        check(num, den);
        if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
        const Field& f = *num.f_;
        Poly r = num;
        std::vector<Field::Value> q;
        const int dd = den.degree();
        const Field::Value lead_inv = f.inv(den.leading());
        if (r.degree() >= dd) q.assign(r.degree() - dd + 1, 0);
        while (r.degree() >= dd) {
            const int shift = r.degree() - dd;
            const Field::Value c = f.mul(r.leading(), lead_inv);
            q[shift] = c;
            for (int i = 0; i <= dd; ++i)
                r.c_[shift + i] = f.sub(r.c_[shift + i], f.mul(c, den.c_[i]));
            r.strip();
        }
        return {Poly(f, std::move(q)), r};
    }

    /// exact division, throws when the remainder is nonzero
    friend Poly exact_div(const Poly& num, const Poly& den) {
        auto [q, r] = divmod(num, den);
        if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
        return q;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(f_->inv(leading()));
    }

    friend bool operator==(const Poly& x, const Poly& y) { return x.f_ == y.f_ && x.c_ == y.c_; }
    friend bool operator!=(const Poly& x, const Poly& y) { return !(x == y); }

    /// text form per the matrix grammar, e.g. "1+a^2*z+z^3"
    std::string str(char var = 'z') const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = 0; i <= degree(); ++i) {
            if (c_[i] == 0) continue;
            if (!out.empty()) out += '+';
            if (i == 0) {
                out += f_->to_string(c_[i]);
            } else {
                if (c_[i] != 1) {
                    out += f_->to_string(c_[i]);
                    out += '*';
                }
                out += var;
                if (i > 1) out += '^' + std::to_string(i);
            }
        }
        return out;
    }

private:
    static void check(const Poly& x, const Poly& y) {
        if (x.f_ != y.f_) throw std::invalid_argument("polynomials over different fields");
    }
    void strip() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    const Field* f_;
    std::vector<Field::Value> c_;  // ascending powers, trailing zeros stripped
};

inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace convcode
