/// \file linalg.hpp
/// Constant matrices over GF(q) and the little linear algebra the rest of
/// the library needs (rank, row reduction, matrix-vector products).

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gf.hpp"

namespace convcode {

/// Dense constant matrix over a field, row major.
class FMatrix {
public:
    FMatrix(const Field& f, int rows, int cols)
        : f_(&f), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }

    const Field& field() const { return *f_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Field::Value& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    Field::Value at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    std::vector<Field::Value> row(int r) const {
        return {a_.begin() + static_cast<size_t>(r) * cols_,
                a_.begin() + static_cast<size_t>(r + 1) * cols_};
    }

    friend bool operator==(const FMatrix& x, const FMatrix& y) {
        return x.f_ == y.f_ && x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

private:
    const Field* f_;
    int rows_, cols_;
    std::vector<Field::Value> a_;
};

inline int hamming_weight(const std::vector<Field::Value>& v) {
    int w = 0;
    for (auto x : v)
        if (x != 0) ++w;
    return w;
}

/// u * M for a length-rows() message vector.
inline std::vector<Field::Value> mat_vec(const std::vector<Field::Value>& u, const FMatrix& M) {
    if (static_cast<int>(u.size()) != M.rows()) throw std::invalid_argument("mat_vec: size mismatch");
    const Field& f = M.field();
    std::vector<Field::Value> out(M.cols(), 0);
    for (int i = 0; i < M.rows(); ++i) {
        if (u[i] == 0) continue;
        for (int j = 0; j < M.cols(); ++j)
            out[j] = f.add(out[j], f.mul(u[i], M.at(i, j)));
    }
    return out;
}

/// Rank by in-place Gaussian elimination on a copy.
inline int rank(FMatrix M) {
    const Field& f = M.field();
    int r = 0;
    for (int c = 0; c < M.cols() && r < M.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < M.rows(); ++i)
            if (M.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = c; j < M.cols(); ++j) std::swap(M.at(piv, j), M.at(r, j));
        const Field::Value inv = f.inv(M.at(r, c));
        for (int i = r + 1; i < M.rows(); ++i) {
            const Field::Value factor = f.mul(M.at(i, c), inv);
            if (factor == 0) continue;
            for (int j = c; j < M.cols(); ++j)
                M.at(i, j) = f.sub(M.at(i, j), f.mul(factor, M.at(r, j)));
        }
        ++r;
    }
    return r;
}

/// Incremental row-space tracker over GF(q); used for early-exit linear
/// independence checks.
class RowSpace {
public:
    explicit RowSpace(const Field& f, int width) : f_(&f), width_(width) {}

    /// Returns true if v was independent of the rows seen so far (and absorbs it).
    bool add(std::vector<Field::Value> v) {
        for (const auto& [lead, row] : rows_) {
            if (v[lead] == 0) continue;
            const Field::Value c = v[lead];
            for (int j = 0; j < width_; ++j) v[j] = f_->sub(v[j], f_->mul(c, row[j]));
        }
        int lead = -1;
        for (int j = 0; j < width_; ++j)
            if (v[j] != 0) {
                lead = j;
                break;
            }
        if (lead < 0) return false;
        const Field::Value inv = f_->inv(v[lead]);
        for (int j = 0; j < width_; ++j) v[j] = f_->mul(v[j], inv);
        rows_.emplace_back(lead, std::move(v));
        return true;
    }

    int rank() const { return static_cast<int>(rows_.size()); }

private:
    const Field* f_;
    int width_;
    std::vector<std::pair<int, std::vector<Field::Value>>> rows_;
};

}  // namespace convcode
