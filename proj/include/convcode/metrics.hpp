/// \file metrics.hpp
/// Exact distance measures by state-space search: free distance, column
/// distances, block distances, evenness, and truncated weight spectra.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "budget.hpp"
#include "code.hpp"

namespace convcode {

/// Shift-register realization of u -> uG for a minimal right-invertible G.
/// States are the q^delta register contents (one register of length nu_i
/// per row); the zero state with zero input loops to itself with weight 0,
/// and no other zero-weight cycle exists (checked at build time).
class Trellis {
public:
    explicit Trellis(const PolyMatrix& G) : prof_(profile(G)) {
        if (!prof_.basic) throw std::invalid_argument("trellis requires a right invertible matrix");
        if (!prof_.minimal) throw std::invalid_argument("trellis requires a minimal matrix");
        const Field& f = G.field();
        const int q = f.size();
        const int k = prof_.k, n = prof_.n;

        nu_ = row_degrees(G);
        long long states = 1;
        for (int i = 0; i < prof_.delta; ++i) {
            states *= q;
            if (states > (1 << 22)) throw std::invalid_argument("state space too large");
        }
        long long inputs = 1;
        for (int i = 0; i < k; ++i) inputs *= q;
        if (states * inputs > (1 << 26)) throw std::invalid_argument("trellis too large");
        num_states_ = static_cast<int>(states);
        num_inputs_ = static_cast<int>(inputs);

        next_.resize(static_cast<size_t>(num_states_) * num_inputs_);
        wt_.resize(next_.size());

        // cell layout: row 0 register first, then row 1, ...
        std::vector<Field::Value> cells(prof_.delta), u(k), out(n);
        std::vector<int> reg_base(k);
        {
            int off = 0;
            for (int i = 0; i < k; ++i) {
                reg_base[i] = off;
                off += nu_[i];
            }
        }
        for (int s = 0; s < num_states_; ++s) {
            int t = s;
            for (int c = 0; c < prof_.delta; ++c) {
                cells[c] = static_cast<Field::Value>(t % q);
                t /= q;
            }
            for (int ui = 0; ui < num_inputs_; ++ui) {
                int v = ui;
                for (int i = 0; i < k; ++i) {
                    u[i] = static_cast<Field::Value>(v % q);
                    v /= q;
                }
                std::fill(out.begin(), out.end(), 0);
                for (int i = 0; i < k; ++i) {
                    for (int d = 0; d <= nu_[i]; ++d) {
                        const Field::Value h = (d == 0) ? u[i] : cells[reg_base[i] + d - 1];
                        if (h == 0) continue;
                        for (int j = 0; j < n; ++j) {
                            const Field::Value c = G.at(i, j).coeff(d);
                            if (c != 0) out[j] = f.add(out[j], f.mul(c, h));
                        }
                    }
                }
                int w = 0;
                for (int j = 0; j < n; ++j)
                    if (out[j] != 0) ++w;
                // shift each register down by one, feeding the fresh input
                long long ns = 0;
                for (int i = k - 1; i >= 0; --i) {
                    for (int d = nu_[i] - 1; d >= 1; --d) ns = ns * q + cells[reg_base[i] + d - 1];
                    if (nu_[i] > 0) ns = ns * q + u[i];
                }
                next_[edge(s, ui)] = static_cast<std::uint32_t>(ns);
                wt_[edge(s, ui)] = static_cast<std::uint8_t>(w);
            }
        }
        assert_no_zero_weight_cycle();
    }

    const CodeProfile& code_profile() const { return prof_; }
    int num_states() const { return num_states_; }
    int num_inputs() const { return num_inputs_; }
    std::uint32_t next(int s, int u) const { return next_[edge(s, u)]; }
    int weight(int s, int u) const { return wt_[edge(s, u)]; }

    /// Least path weight from each state back to the zero state (Dijkstra
    /// over the reversed edge set; every state drains to zero).
    std::vector<int> min_weight_to_zero() const {
        constexpr int INF = 1 << 29;
        // reverse adjacency in CSR form
        std::vector<int> deg(num_states_ + 1, 0);
        for (size_t e = 0; e < next_.size(); ++e) ++deg[next_[e] + 1];
        for (int s = 0; s < num_states_; ++s) deg[s + 1] += deg[s];
        std::vector<std::pair<std::uint32_t, std::uint8_t>> radj(next_.size());
        {
            std::vector<int> fill(deg.begin(), deg.end() - 1);
            for (int s = 0; s < num_states_; ++s)
                for (int u = 0; u < num_inputs_; ++u) {
                    const auto t = next_[edge(s, u)];
                    radj[fill[t]++] = {static_cast<std::uint32_t>(s), wt_[edge(s, u)]};
                }
        }
        std::vector<int> dist(num_states_, INF);
        using Item = std::pair<int, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        dist[0] = 0;
        pq.emplace(0, 0);
        while (!pq.empty()) {
            auto [d, s] = pq.top();
            pq.pop();
            if (d != dist[s]) continue;
            for (int e = deg[s]; e < deg[s + 1]; ++e) {
                const auto [src, w] = radj[e];
                if (d + w < dist[src]) {
                    dist[src] = d + w;
                    pq.emplace(dist[src], src);
                }
            }
        }
        return dist;
    }

private:
    size_t edge(int s, int u) const { return static_cast<size_t>(s) * num_inputs_ + u; }

    void assert_no_zero_weight_cycle() const {
        // DFS over zero-weight edges, excluding the zero self-loop
        std::vector<std::uint8_t> color(num_states_, 0);
        std::vector<std::pair<int, int>> stack;  // state, next input index
        for (int s0 = 0; s0 < num_states_; ++s0) {
            if (color[s0]) continue;
            color[s0] = 1;
            stack.emplace_back(s0, 0);
            while (!stack.empty()) {
                auto& [s, ui] = stack.back();
                if (ui == num_inputs_) {
                    color[s] = 2;
                    stack.pop_back();
                    continue;
                }
                const int u = ui++;
                if (s == 0 && u == 0) continue;
                if (weight(s, u) != 0) continue;
                const int t = static_cast<int>(next(s, u));
                if (color[t] == 1) throw std::logic_error("zero-weight cycle in trellis");
                if (color[t] == 0) {
                    color[t] = 1;
                    stack.emplace_back(t, 0);
                }
            }
        }
    }

    CodeProfile prof_;
    std::vector<int> nu_;
    int num_states_ = 0, num_inputs_ = 0;
    std::vector<std::uint32_t> next_;
    std::vector<std::uint8_t> wt_;
};

/// Minimum weight over nonzero codewords: least-weight trellis path that
/// leaves the zero state on a nonzero input and returns to it.
inline std::int64_t free_distance(const PolyMatrix& G) {
    const Trellis tr(G);
    const auto dist = tr.min_weight_to_zero();
    std::int64_t best = -1;
    for (int u = 1; u < tr.num_inputs(); ++u) {
        const std::int64_t cand = tr.weight(0, u) + dist[tr.next(0, u)];
        if (best < 0 || cand < best) best = cand;
    }
    return best;
}

/// d^c_0 .. d^c_L by a forward dynamic program over trellis depth, first
/// input nonzero, minimum over all end states.
inline std::vector<std::int64_t> column_distances(const PolyMatrix& G, int L) {
    if (L < 0) throw std::invalid_argument("column_distances: L < 0");
    const Trellis tr(G);
    constexpr int INF = 1 << 29;
    std::vector<int> cur(tr.num_states(), INF), nxt;
    for (int u = 1; u < tr.num_inputs(); ++u) {
        const int t = static_cast<int>(tr.next(0, u));
        cur[t] = std::min(cur[t], tr.weight(0, u));
    }
    std::vector<std::int64_t> out;
    out.reserve(L + 1);
    out.push_back(*std::min_element(cur.begin(), cur.end()));
    for (int l = 1; l <= L; ++l) {
        nxt.assign(tr.num_states(), INF);
        for (int s = 0; s < tr.num_states(); ++s) {
            if (cur[s] == INF) continue;
            for (int u = 0; u < tr.num_inputs(); ++u) {
                const int t = static_cast<int>(tr.next(s, u));
                const int c = cur[s] + tr.weight(s, u);
                if (c < nxt[t]) nxt[t] = c;
            }
        }
        cur.swap(nxt);
        out.push_back(*std::min_element(cur.begin(), cur.end()));
    }
    return out;
}

struct DistanceReport {
    std::int64_t d_free = 0;
    std::vector<std::int64_t> coldist;
    std::optional<int> stabilization_index;  ///< first l with d^c_l = d_free
};

inline DistanceReport distance_report(const PolyMatrix& G, int L) {
    DistanceReport r;
    r.d_free = free_distance(G);
    r.coldist = column_distances(G, L);
    for (size_t l = 0; l < r.coldist.size(); ++l)
        if (r.coldist[l] == r.d_free) {
            r.stabilization_index = static_cast<int>(l);
            break;
        }
    return r;
}

/// Minimum weight over the q^k - 1 nonzero row combinations of a constant
/// matrix.
inline std::int64_t block_distance(const FMatrix& M) {
    const Field& f = M.field();
    const int k = M.rows(), q = f.size();
    if (k > 20) throw std::invalid_argument("block_distance: too many rows to enumerate");
    long long total = 1;
    for (int i = 0; i < k; ++i) {
        total *= q;
        if (total > (1 << 26)) throw std::invalid_argument("block_distance: message space too large");
    }
    std::vector<Field::Value> u(k, 0);
    std::int64_t best = -1;
    for (long long c = 1; c < total; ++c) {
        int i = 0;
        while (true) {
            if (u[i] + 1 < q) {
                ++u[i];
                break;
            }
            u[i] = 0;
            ++i;
        }
        const int w = hamming_weight(mat_vec(u, M));
        if (best < 0 || w < best) best = w;
    }
    return best;
}

struct Example38Result {
    int family1_max_d = 0;
    int family2_max_d = 0;
};

/// Exhaustive search over the two 3x9 ternary families parameterized by
/// a_1..a_7; the maximum block distance found in either family stays below
/// 6, which rules out a (3,2,3)_3 code meeting the generalized Singleton
/// bound.
inline Example38Result example38_search() {
    const auto f3 = Field::get(3, 1);
    const Field& f = *f3;
    const std::vector<std::vector<int>> fixed1 = {{1, 1, 2, 1, 1, 1, 0, 0, 0},
                                                  {0, 0, 0, 1, 1, 2, 1, 1, 1}};
    const std::vector<std::vector<int>> fixed2 = {{1, 2, 2, 1, 1, 1, 0, 0, 0},
                                                  {0, 0, 0, 1, 2, 2, 1, 1, 1}};
    auto family_max = [&](const std::vector<std::vector<int>>& fixed) {
        int best = 0;
        for (int code = 0; code < 2187; ++code) {  // 3^7 assignments
            int a[7], c = code;
            for (int i = 0; i < 7; ++i) {
                a[i] = c % 3;
                c /= 3;
            }
            FMatrix M(f, 3, 9);
            const int row1[9] = {a[0], a[1], a[2], 0, a[3], a[4], 0, a[5], a[6]};
            for (int j = 0; j < 9; ++j) {
                M.at(0, j) = static_cast<Field::Value>(row1[j]);
                M.at(1, j) = static_cast<Field::Value>(fixed[0][j]);
                M.at(2, j) = static_cast<Field::Value>(fixed[1][j]);
            }
            best = std::max(best, static_cast<int>(block_distance(M)));
        }
        return best;
    };
    return {family_max(fixed1), family_max(fixed2)};
}

/// Binary codes only: every codeword has even weight iff every generator
/// row has even total coefficient weight (over GF(2), wt(u+v) = wt(u)+wt(v)
/// mod 2 and shifting preserves weight, so codeword parity is the
/// u-support-weighted sum of row parities).
inline bool is_even(const PolyMatrix& G) {
    if (G.field().size() != 2) throw std::invalid_argument("is_even: field must be GF(2)");
    for (int i = 0; i < G.rows(); ++i) {
        int w = 0;
        for (int j = 0; j < G.cols(); ++j) w += G.at(i, j).weight();
        if (w % 2 != 0) return false;
    }
    return true;
}

struct WeightSpectrum {
    std::map<int, std::uint64_t> counts;  ///< atomic paths per weight <= w_max
    bool complete = true;                 ///< false when the budget ran out
};

/// Counts of atomic trellis paths: leave the zero state once on a nonzero
/// input, return once, never touch zero in between.  Depth-first search
/// with weight pruning against the least-weight return distances.
inline WeightSpectrum weight_spectrum(const PolyMatrix& G, int w_max, const SearchBudget& budget = {}) {
    const Trellis tr(G);
    const auto dist = tr.min_weight_to_zero();
    WeightSpectrum out;
    detail::BudgetMeter meter(budget);

    std::vector<std::tuple<int, int, int>> stack;  // state, next input, accumulated weight
    auto visit = [&](int s, int u, int acc) -> bool {
        if (!meter.tick()) return false;
        const int w = acc + tr.weight(s, u);
        const int t = static_cast<int>(tr.next(s, u));
        if (w + dist[t] > w_max) return true;
        if (t == 0)
            ++out.counts[w];
        else
            stack.emplace_back(t, 0, w);
        return true;
    };

    for (int u0 = 1; u0 < tr.num_inputs() && out.complete; ++u0) {
        if (!visit(0, u0, 0)) out.complete = false;
        while (!stack.empty() && out.complete) {
            auto& [s, ui, acc] = stack.back();
            if (ui == tr.num_inputs()) {
                stack.pop_back();
                continue;
            }
            const int u = ui++;
            if (!visit(s, u, acc)) out.complete = false;
        }
    }
    return out;
}

}  // namespace convcode
