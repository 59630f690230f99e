/// \file polymat.hpp
/// k x n matrices over GF(q)[z]: minors and complexity, right inverses via
/// column Hermite reduction, row degrees, minimality, module membership.

#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "linalg.hpp"
#include "poly.hpp"

namespace convcode {

class PolyMatrix {
public:
    PolyMatrix(const Field& f, int rows, int cols)
        : f_(&f), rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, Poly(f)) {
        if (rows <= 0 || cols <= 0) throw std::invalid_argument("empty matrix");
    }
    PolyMatrix(const Field& f, int rows, int cols, std::vector<Poly> entries)
        : f_(&f), rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (rows <= 0 || cols <= 0) throw std::invalid_argument("empty matrix");
        if (e_.size() != static_cast<size_t>(rows) * cols)
            throw std::invalid_argument("entry count mismatch");
        for (const auto& p : e_)
            if (&p.field() != f_) throw std::invalid_argument("mixed fields in matrix");
    }

    static PolyMatrix identity(const Field& f, int k) {
        PolyMatrix m(f, k, k);
        for (int i = 0; i < k; ++i) m.at(i, i) = Poly::one(f);
        return m;
    }
    static PolyMatrix from_rows(const Field& f, const std::vector<std::vector<Poly>>& rows) {
        if (rows.empty() || rows[0].empty()) throw std::invalid_argument("empty matrix");
        PolyMatrix m(f, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows[0].size()) throw std::invalid_argument("ragged rows");
            for (size_t j = 0; j < rows[i].size(); ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
        }
        return m;
    }

    const Field& field() const { return *f_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Poly& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const Poly& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

    std::vector<Poly> row(int r) const {
        return {e_.begin() + static_cast<size_t>(r) * cols_, e_.begin() + static_cast<size_t>(r + 1) * cols_};
    }

    PolyMatrix transposed() const {
        PolyMatrix t(*f_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    /// submatrix keeping the given 0-based columns, in the given order
    PolyMatrix select_columns(const std::vector<int>& cols) const {
        if (cols.empty()) throw std::invalid_argument("no columns selected");
        PolyMatrix m(*f_, rows_, static_cast<int>(cols.size()));
        for (int i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols.size(); ++j) {
                if (cols[j] < 0 || cols[j] >= cols_) throw std::invalid_argument("column index out of range");
                m.at(i, static_cast<int>(j)) = at(i, cols[j]);
            }
        return m;
    }

    /// coefficient matrix of z^d
    FMatrix coeff_matrix(int d) const {
        FMatrix m(*f_, rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).coeff(d);
        return m;
    }

    /// entrywise truncation to degree <= maxdeg
    PolyMatrix truncated(int maxdeg) const {
        PolyMatrix m(*f_, rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).truncated(maxdeg);
        return m;
    }

    friend PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y) {
        if (x.f_ != y.f_) throw std::invalid_argument("matrices over different fields");
        if (x.cols_ != y.rows_) throw std::invalid_argument("dimension mismatch");
        PolyMatrix out(*x.f_, x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int l = 0; l < x.cols_; ++l) {
                if (x.at(i, l).is_zero()) continue;
                for (int j = 0; j < y.cols_; ++j)
                    out.at(i, j) = out.at(i, j) + x.at(i, l) * y.at(l, j);
            }
        return out;
    }

    friend bool operator==(const PolyMatrix& x, const PolyMatrix& y) {
        return x.f_ == y.f_ && x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.e_ == y.e_;
    }

private:
    const Field* f_;
    int rows_, cols_;
    std::vector<Poly> e_;  // row major
};

inline std::vector<Poly> row_vec_mul(const std::vector<Poly>& u, const PolyMatrix& M) {
    if (static_cast<int>(u.size()) != M.rows()) throw std::invalid_argument("row_vec_mul: size mismatch");
    std::vector<Poly> out(M.cols(), Poly(M.field()));
    for (int i = 0; i < M.rows(); ++i) {
        if (u[i].is_zero()) continue;
        for (int j = 0; j < M.cols(); ++j) out[j] = out[j] + u[i] * M.at(i, j);
    }
    return out;
}

// --- determinants -----------------------------------------------------------

/// Laplace expansion along the first row.
inline Poly det_laplace(const PolyMatrix& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const Field& f = M.field();
    const int n = M.rows();
    if (n == 1) return M.at(0, 0);

    // recursive expansion over column subsets of the remaining rows
    struct Rec {
        const PolyMatrix& m;
        const Field& f;
        Poly run(int row, std::vector<int>& cols) {
            const int n = m.rows();
            if (row == n) return Poly::one(f);
            Poly acc(f);
            for (size_t idx = 0; idx < cols.size(); ++idx) {
                const int c = cols[idx];
                if (m.at(row, c).is_zero()) continue;
                std::vector<int> rest;
                rest.reserve(cols.size() - 1);
                for (size_t t = 0; t < cols.size(); ++t)
                    if (t != idx) rest.push_back(cols[t]);
                Poly sub = m.at(row, c) * run(row + 1, rest);
                if (idx % 2 == 1) sub = sub.scaled(f.neg(1));
                acc = acc + sub;
            }
            return acc;
        }
    } rec{M, f};
    std::vector<int> cols(n);
    std::iota(cols.begin(), cols.end(), 0);
    return rec.run(0, cols);
}

/// Bareiss fraction-free elimination; exact divisions only.
inline Poly det_fraction_free(const PolyMatrix& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const Field& f = M.field();
    const int n = M.rows();
    PolyMatrix w = M;
    Poly prev = Poly::one(f);
    bool negate = false;
    for (int k = 0; k < n - 1; ++k) {
        if (w.at(k, k).is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!w.at(i, k).is_zero()) {
                    piv = i;
                    break;
                }
            if (piv < 0) return Poly(f);  // singular
            for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(piv, j));
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Poly num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                w.at(i, j) = exact_div(num, prev);
            }
        prev = w.at(k, k);
    }
    Poly d = w.at(n - 1, n - 1);
    return negate ? d.scaled(f.neg(1)) : d;
}

// --- minors and complexity ---------------------------------------------------

struct MinorSummary {
    int delta;   ///< max degree over all full-size minors (0 when all vanish)
    bool basic;  ///< gcd of the minors is a nonzero constant
};

namespace detail {
template <typename Fn>
inline void for_each_combination(int n, int k, Fn&& fn) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}
}  // namespace detail

/// Exhaustive enumeration of all C(n,k) full-size minors.
inline MinorSummary minor_summary(const PolyMatrix& G) {
    if (G.rows() > G.cols()) throw std::invalid_argument("more rows than columns");
    const Field& f = G.field();
    int delta = kNegInfDegree;
    Poly g(f);  // running gcd
    detail::for_each_combination(G.cols(), G.rows(), [&](const std::vector<int>& cols) {
        Poly d = det_laplace(G.select_columns(cols));
        delta = deg_max(delta, d.degree());
        if (!d.is_zero()) g = g.is_zero() ? d.monic() : poly_gcd(g, d);
    });
    const bool basic = !g.is_zero() && g.degree() == 0;
    return {delta == kNegInfDegree ? 0 : delta, basic};
}

/// Complexity: the maximum degree over all k-minors of G.
inline int complexity(const PolyMatrix& G) { return minor_summary(G).delta; }

// --- row degrees and minimality ----------------------------------------------

/// Per-row maximum entry degree (kNegInfDegree for a zero row).
inline std::vector<int> row_degrees(const PolyMatrix& G) {
    std::vector<int> nu(G.rows(), kNegInfDegree);
    for (int i = 0; i < G.rows(); ++i)
        for (int j = 0; j < G.cols(); ++j) nu[i] = deg_max(nu[i], G.at(i, j).degree());
    return nu;
}

/// Coefficients of z^{nu_i} in row i; rejects zero rows.
inline FMatrix leading_row_matrix(const PolyMatrix& G) {
    const auto nu = row_degrees(G);
    FMatrix m(G.field(), G.rows(), G.cols());
    for (int i = 0; i < G.rows(); ++i) {
        if (nu[i] == kNegInfDegree) throw std::invalid_argument("zero row has no leading coefficients");
        for (int j = 0; j < G.cols(); ++j) m.at(i, j) = G.at(i, j).coeff(nu[i]);
    }
    return m;
}

/// delta == sum of row degrees.  The result is cross-checked against the
/// rank of the leading row matrix; the two characterizations must agree.
inline bool is_minimal(const PolyMatrix& G) {
    const auto summary = minor_summary(G);
    if (!summary.basic) throw std::invalid_argument("matrix is not right invertible");
    const auto nu = row_degrees(G);
    long long total = 0;
    for (int d : nu) total += d;  // basic implies no zero rows
    const bool by_degrees = summary.delta == total;
    const bool by_leading = rank(leading_row_matrix(G)) == G.rows();
    if (by_degrees != by_leading) throw std::logic_error("minimality criteria disagree");
    return by_degrees;
}

// --- right inverse -----------------------------------------------------------

/// Polynomial right inverse H with G*H = I, or nullopt when G is not basic.
/// Column Hermite-style reduction: Euclidean gcd steps on the entries of each
/// pivot row bring G*U to lower-triangular [L | 0]; G is right invertible
/// exactly when every diagonal of L is a nonzero constant.
inline std::optional<PolyMatrix> right_inverse(const PolyMatrix& G) {
    if (G.rows() > G.cols()) throw std::invalid_argument("more rows than columns");
    const Field& f = G.field();
    const int k = G.rows(), n = G.cols();
    PolyMatrix w = G;
    PolyMatrix u = PolyMatrix::identity(f, n);

    auto col_swap = [&](int a, int b) {
        if (a == b) return;
        for (int i = 0; i < k; ++i) std::swap(w.at(i, a), w.at(i, b));
        for (int i = 0; i < n; ++i) std::swap(u.at(i, a), u.at(i, b));
    };
    auto col_submul = [&](int dst, int src, const Poly& q) {
        if (q.is_zero()) return;
        for (int i = 0; i < k; ++i) w.at(i, dst) = w.at(i, dst) - q * w.at(i, src);
        for (int i = 0; i < n; ++i) u.at(i, dst) = u.at(i, dst) - q * u.at(i, src);
    };

    for (int r = 0; r < k; ++r) {
        while (true) {
            int best = -1;
            for (int j = r; j < n; ++j) {
                if (w.at(r, j).is_zero()) continue;
                if (best < 0 || w.at(r, j).degree() < w.at(r, best).degree()) best = j;
            }
            if (best < 0) return std::nullopt;  // rank deficient
            col_swap(r, best);
            bool clean = true;
            for (int j = r + 1; j < n; ++j) {
                if (w.at(r, j).is_zero()) continue;
                auto [q, rem] = divmod(w.at(r, j), w.at(r, r));
                col_submul(j, r, q);
                if (!w.at(r, j).is_zero()) clean = false;
            }
            if (clean) break;
        }
    }
    for (int r = 0; r < k; ++r)
        if (w.at(r, r).degree() != 0) return std::nullopt;  // gcd of minors is not constant

    // X = L^{-1} by forward substitution (L lower triangular, unit diagonals
    // up to scalars)
    PolyMatrix x(f, k, k);
    for (int j = 0; j < k; ++j) {
        for (int i = j; i < k; ++i) {
            Poly rhs = (i == j) ? Poly::one(f) : Poly(f);
            for (int t = j; t < i; ++t) rhs = rhs - w.at(i, t) * x.at(t, j);
            x.at(i, j) = rhs.scaled(f.inv(w.at(i, i).coeff(0)));
        }
    }
    PolyMatrix ext(f, n, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) ext.at(i, j) = x.at(i, j);
    PolyMatrix h = u * ext;
    if (!(G * h == PolyMatrix::identity(f, k))) throw std::logic_error("right inverse verification failed");
    return h;
}

// --- membership ---------------------------------------------------------------

/// Message u with u*G = w, or nullopt.  H must be a right inverse of G.
inline std::optional<std::vector<Poly>> membership(const std::vector<Poly>& w, const PolyMatrix& G,
                                                   const PolyMatrix& H) {
    auto u = row_vec_mul(w, H);
    if (row_vec_mul(u, G) != w) return std::nullopt;
    return u;
}

inline std::optional<std::vector<Poly>> membership(const std::vector<Poly>& w, const PolyMatrix& G) {
    auto h = right_inverse(G);
    if (!h) throw std::invalid_argument("matrix is not right invertible");
    return membership(w, G, *h);
}

// --- row module machinery (used by the skew-algebra basis extraction) ---------

/// Triangular basis of the F[z]-row module spanned by the given rows.
/// Row operations only, so the module is preserved; pivots sit at strictly
/// increasing column indices and all later rows vanish at earlier pivots.
inline std::vector<std::vector<Poly>> row_module_echelon(std::vector<std::vector<Poly>> rows) {
    std::vector<std::vector<Poly>> done;
    if (rows.empty()) return done;
    const size_t n = rows[0].size();

    auto is_zero_row = [](const std::vector<Poly>& r) {
        for (const auto& p : r)
            if (!p.is_zero()) return false;
        return true;
    };
    rows.erase(std::remove_if(rows.begin(), rows.end(), is_zero_row), rows.end());

    for (size_t c = 0; c < n && !rows.empty(); ++c) {
        while (true) {
            int piv = -1;
            for (size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][c].is_zero()) continue;
                if (piv < 0 || rows[i][c].degree() < rows[piv][c].degree()) piv = static_cast<int>(i);
            }
            if (piv < 0) break;
            bool clean = true;
            for (size_t i = 0; i < rows.size(); ++i) {
                if (static_cast<int>(i) == piv || rows[i][c].is_zero()) continue;
                auto [q, rem] = divmod(rows[i][c], rows[piv][c]);
                for (size_t j = 0; j < n; ++j) rows[i][j] = rows[i][j] - q * rows[piv][j];
                if (!rows[i][c].is_zero()) clean = false;
            }
            if (clean) {
                done.push_back(std::move(rows[piv]));
                rows.erase(rows.begin() + piv);
                rows.erase(std::remove_if(rows.begin(), rows.end(), is_zero_row), rows.end());
                break;
            }
        }
    }
    return done;
}

/// Does v lie in the module spanned by an echelon basis?  Pivot divisions
/// must come out exact and the tail must vanish.
inline bool in_row_module(std::vector<Poly> v, const std::vector<std::vector<Poly>>& echelon) {
    for (const auto& row : echelon) {
        size_t c = 0;
        while (c < row.size() && row[c].is_zero()) ++c;
        if (c == row.size()) continue;
        if (v[c].is_zero()) continue;
        auto [q, rem] = divmod(v[c], row[c]);
        if (!rem.is_zero()) return false;
        for (size_t j = 0; j < v.size(); ++j) v[j] = v[j] - q * row[j];
    }
    for (const auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

}  // namespace convcode
