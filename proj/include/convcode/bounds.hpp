/// \file bounds.hpp
/// Distance bounds for block and convolutional codes as exact integer
/// computations: generalized Singleton, Heller, Griesmer (with the finite
/// cutoff index), block bounds, and the MDS field-size bound.
///
/// The Heller terms involve q^K for unbounded K, so that computation runs
/// on arbitrary-precision integers; everything returned fits in 64 bits.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "code.hpp"
#include "gf.hpp"

namespace convcode {

namespace detail {
inline void check_params(long long n, long long k, long long delta) {
    if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
    if (delta < 0) throw std::invalid_argument("need delta >= 0");
}
inline void check_conv_params(long long n, long long k, long long delta, long long m, long long q) {
    check_params(n, k, delta);
    if (k >= n) throw std::invalid_argument("need k < n");
    if (m < 0 || k * m < delta) throw std::invalid_argument("need k*m >= delta");
    if (!is_prime_power(q)) throw std::invalid_argument("q must be a prime power");
}
}  // namespace detail

/// S(n,k,delta) = (n-k)(floor(delta/k)+1) + delta + 1.
inline std::int64_t singleton_generalized(long long n, long long k, long long delta) {
    detail::check_params(n, k, delta);
    return (n - k) * (delta / k + 1) + delta + 1;
}

/// Forney indices forced on an MDS code: k-r copies of a and r copies of
/// a+1 where delta = a*k + r.
inline std::vector<int> mds_forney_profile(int n, int k, int delta) {
    detail::check_params(n, k, delta);
    const int a = delta / k, r = delta % k;
    std::vector<int> out(k, a);
    for (int i = k - r; i < k; ++i) out[i] = a + 1;
    return out;
}

/// H_q(n,k,delta;m): min over i of floor(n(m+i) q^{K-1}(q-1) / (q^K - 1))
/// with K = k(m+i)-delta.  The index set starts at 1 when km = delta and at
/// 0 otherwise; iteration stops once the analytic lower envelope
/// n(m+i)(q-1)/q - 1 can no longer beat the running minimum.
inline std::int64_t heller_bound(long long n, long long k, long long delta, long long m, long long q) {
    detail::check_conv_params(n, k, delta, m, q);
    using boost::multiprecision::cpp_int;
    std::int64_t best = -1;
    for (long long i = (k * m == delta) ? 1 : 0;; ++i) {
        const long long N = n * (m + i);
        if (best >= 0 && N * (q - 1) >= q * (best + 1)) break;  // envelope >= best
        const long long K = k * (m + i) - delta;
        cpp_int qK = boost::multiprecision::pow(cpp_int(q), static_cast<unsigned>(K));
        cpp_int term = (cpp_int(N) * (qK - qK / q)) / (qK - 1);
        const std::int64_t t = term.convert_to<std::int64_t>();
        if (best < 0 || t < best) best = t;
    }
    return best;
}

namespace detail {
/// sum_{l=0}^{K-1} ceil(d/q^l) <= limit, with powers capped at d to avoid
/// overflow (once q^l >= d every remaining term is 1).
inline bool griesmer_sum_ok(long long d, long long q, long long K, long long limit) {
    long long sum = 0, pw = 1;
    for (long long l = 0; l < K; ++l) {
        if (pw >= d) {
            sum += K - l;
            break;
        }
        sum += (d + pw - 1) / pw;
        if (sum > limit) return false;
        pw *= q;
    }
    return sum <= limit;
}
}  // namespace detail

struct GriesmerResult {
    std::int64_t value;
    std::int64_t i0;  ///< cutoff index: minimal i in N with q^{k(m+i)-delta} >= S
};

/// G_q(n,k,delta;m): the largest d' in {1,...,S} satisfying the Griesmer
/// inequality for every index in the finite cutoff set.
inline GriesmerResult griesmer_conv_full(long long n, long long k, long long delta, long long m,
                                         long long q) {
    detail::check_conv_params(n, k, delta, m, q);
    const std::int64_t S = singleton_generalized(n, k, delta);

    long long i0 = 1;
    while (true) {
        long long K = k * (m + i0) - delta;
        long long pw = 1;
        bool big = false;
        for (long long l = 0; l < K; ++l) {
            pw *= q;
            if (pw >= S) {
                big = true;
                break;
            }
        }
        if (big) break;
        ++i0;
    }

    const long long i_lo = (k * m == delta) ? 1 : 0;
    for (std::int64_t d = S; d >= 1; --d) {
        bool ok = true;
        for (long long i = i_lo; i <= i0 && ok; ++i)
            ok = detail::griesmer_sum_ok(d, q, k * (m + i) - delta, n * (m + i));
        if (ok) return {d, i0};
    }
    throw std::logic_error("griesmer: no feasible value");  // d = 1 always feasible
}

inline std::int64_t griesmer_conv(long long n, long long k, long long delta, long long m, long long q) {
    return griesmer_conv_full(n, k, delta, m, q).value;
}

struct BlockBounds {
    std::int64_t singleton;
    std::int64_t plotkin;
    std::int64_t griesmer;
};

inline BlockBounds block_bounds(long long n, long long k, long long q) {
    if (k < 1 || k >= n) throw std::invalid_argument("need 1 <= k < n");
    if (!is_prime_power(q)) throw std::invalid_argument("q must be a prime power");
    using boost::multiprecision::cpp_int;
    BlockBounds b{};
    b.singleton = n - k + 1;
    cpp_int qk = boost::multiprecision::pow(cpp_int(q), static_cast<unsigned>(k));
    b.plotkin = ((cpp_int(n) * (qk - qk / q)) / (qk - 1)).convert_to<std::int64_t>();
    std::int64_t d = 1;
    while (detail::griesmer_sum_ok(d + 1, q, k, n)) ++d;
    b.griesmer = d;
    return b;
}

struct MdsFieldSize {
    std::int64_t bound_num;  ///< exact rational lower bound on q, as num/den
    std::int64_t bound_den;
    std::int64_t q_min;  ///< smallest prime power >= the bound
};

/// Lower bound on the field size of an (n,k,delta)-MDS code, with the
/// memory taken from the compact Forney profile forced by MDS-ness.
inline MdsFieldSize mds_min_field(int n, int k, int delta) {
    detail::check_params(n, k, delta);
    if (k >= n) throw std::invalid_argument("need k < n");
    const std::int64_t d = singleton_generalized(n, k, delta);
    const auto profile = mds_forney_profile(n, k, delta);
    const long long m = profile.back();

    MdsFieldSize out{};
    if (k == 1 || (k > 1 && static_cast<long long>(k) * m == delta + 1)) {
        const std::int64_t g = std::gcd(d, static_cast<std::int64_t>(n - k + 1));
        out.bound_num = d / g;
        out.bound_den = (n - k + 1) / g;
    } else {
        out.bound_num = d;
        out.bound_den = 1;
    }
    std::int64_t q = (out.bound_num + out.bound_den - 1) / out.bound_den;
    if (q < 2) q = 2;
    while (!is_prime_power(q)) ++q;
    out.q_min = q;
    return out;
}

struct MdsFlags {
    bool is_mds = false;
    int M = 0;  ///< earliest column-distance index that can reach the free distance
    bool is_strongly_mds = false;
    bool is_compact = false;
};

inline MdsFlags mds_flags(const CodeProfile& p, std::int64_t d, const std::vector<std::int64_t>& coldist) {
    MdsFlags out;
    const std::int64_t S = singleton_generalized(p.n, p.k, p.delta);
    out.is_mds = (d == S);
    out.M = p.delta / p.k + (p.n - p.k > 0 ? (p.delta + p.n - p.k - 1) / (p.n - p.k) : 0);
    if (static_cast<int>(coldist.size()) <= out.M)
        throw std::invalid_argument("mds_flags: column distances do not cover index M");
    out.is_strongly_mds = out.is_mds && coldist[out.M] == d;
    auto sorted = p.forney;
    std::sort(sorted.begin(), sorted.end());
    out.is_compact = sorted == mds_forney_profile(p.n, p.k, p.delta);
    return out;
}

/// Everything at once, the shape the CLI reports.
struct BoundsReport {
    std::int64_t singleton_gen;
    std::int64_t heller;
    std::int64_t griesmer;
    std::int64_t i0;
    std::optional<BlockBounds> block;  ///< present when delta = m = 0
    MdsFieldSize mds_field;
};

inline BoundsReport bounds_report(long long n, long long k, long long delta, long long m, long long q) {
    BoundsReport r{};
    r.singleton_gen = singleton_generalized(n, k, delta);
    r.heller = heller_bound(n, k, delta, m, q);
    const auto g = griesmer_conv_full(n, k, delta, m, q);
    r.griesmer = g.value;
    r.i0 = g.i0;
    if (delta == 0 && m == 0) r.block = block_bounds(n, k, q);
    r.mds_field = mds_min_field(static_cast<int>(n), static_cast<int>(k), static_cast<int>(delta));
    return r;
}

}  // namespace convcode
