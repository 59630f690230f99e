/// \file code.hpp
/// Code profiles (n, k, delta; m)_q with Forney indices, and column
/// puncturing of generator matrices.

#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "polymat.hpp"

namespace convcode {

struct CodeProfile {
    int n = 0;
    int k = 0;
    int delta = 0;
    int memory = 0;
    int q = 0;
    std::vector<int> forney;  ///< sorted row degrees (-1 marks a zero row)
    bool minimal = false;
    bool basic = false;

    std::string id() const {
        return "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(delta) + ";" +
               std::to_string(memory) + ")_" + std::to_string(q);
    }
};

inline CodeProfile profile(const PolyMatrix& G) {
    if (G.rows() > G.cols()) throw std::invalid_argument("profile: more rows than columns");
    CodeProfile p;
    p.n = G.cols();
    p.k = G.rows();
    p.q = G.field().size();

    const auto summary = minor_summary(G);
    p.delta = summary.delta;
    p.basic = summary.basic;

    const auto nu = row_degrees(G);
    bool zero_row = false;
    long long total = 0;
    int mem = 0;
    for (int d : nu) {
        if (d == kNegInfDegree) {
            zero_row = true;
            p.forney.push_back(-1);
        } else {
            total += d;
            mem = std::max(mem, d);
            p.forney.push_back(d);
        }
    }
    std::sort(p.forney.begin(), p.forney.end());
    p.memory = mem;

    if (p.basic && !zero_row) {
        const bool by_degrees = p.delta == total;
        const bool by_leading = rank(leading_row_matrix(G)) == p.k;
        if (by_degrees != by_leading) throw std::logic_error("minimality criteria disagree");
        p.minimal = by_degrees;
    }
    return p;
}

/// Keep the 1-based columns listed, in the listed order.
inline PolyMatrix puncture(const PolyMatrix& G, const std::vector<int>& cols_1based) {
    if (static_cast<int>(cols_1based.size()) < G.rows())
        throw std::invalid_argument("puncture: fewer columns than rows");
    std::set<int> seen;
    std::vector<int> cols0;
    cols0.reserve(cols_1based.size());
    for (int c : cols_1based) {
        if (c < 1 || c > G.cols()) throw std::invalid_argument("puncture: column index out of range");
        if (!seen.insert(c).second) throw std::invalid_argument("puncture: duplicate column index");
        cols0.push_back(c - 1);
    }
    return G.select_columns(cols0);
}

}  // namespace convcode
