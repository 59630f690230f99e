#include <boost/multiprecision/cpp_int.hpp>
#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "convcode/bounds.hpp"

using namespace convcode;
using boost::multiprecision::cpp_int;

namespace {

// independent oracle: one Heller term, straight from the displayed formula
std::int64_t heller_term(long long n, long long k, long long delta, long long m, long long q,
                         long long i) {
    const long long K = k * (m + i) - delta;
    const cpp_int qK = boost::multiprecision::pow(cpp_int(q), static_cast<unsigned>(K));
    const cpp_int qK1 = boost::multiprecision::pow(cpp_int(q), static_cast<unsigned>(K - 1));
    return ((cpp_int(n * (m + i)) * qK1 * (q - 1)) / (qK - 1)).convert_to<std::int64_t>();
}

std::int64_t heller_direct(long long n, long long k, long long delta, long long m, long long q,
                           long long imax) {
    std::int64_t best = -1;
    for (long long i = (k * m == delta) ? 1 : 0; i <= imax; ++i)
        best = (best < 0) ? heller_term(n, k, delta, m, q, i)
                          : std::min(best, heller_term(n, k, delta, m, q, i));
    return best;
}

}  // namespace

TEST_CASE("generalized Singleton bound") {
    REQUIRE(singleton_generalized(3, 2, 3) == 6);
    REQUIRE(singleton_generalized(5, 2, 3) == 10);
    for (int n = 2; n <= 10; ++n)
        for (int k = 1; k < n; ++k) REQUIRE(singleton_generalized(n, k, 0) == n - k + 1);
    REQUIRE_THROWS_AS(singleton_generalized(3, 4, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(singleton_generalized(3, 2, -1), std::invalid_argument);
}

TEST_CASE("MDS Forney profile") {
    REQUIRE(mds_forney_profile(3, 2, 3) == std::vector<int>{1, 2});
    REQUIRE(mds_forney_profile(5, 2, 4) == std::vector<int>{2, 2});
    REQUIRE(mds_forney_profile(7, 3, 0) == std::vector<int>{0, 0, 0});
}

TEST_CASE("Heller bound spot values") {
    // derived oracle: direct evaluation of the terms i = 1..10 gives
    // 13, 13, 15, ... so the minimum is 13
    REQUIRE(heller_term(5, 2, 6, 3, 2, 1) == 13);
    REQUIRE(heller_term(5, 2, 6, 3, 2, 2) == 13);
    REQUIRE(heller_term(5, 2, 6, 3, 2, 3) == 15);
    REQUIRE(heller_direct(5, 2, 6, 3, 2, 10) == 13);
    REQUIRE(heller_bound(5, 2, 6, 3, 2) == 13);

    REQUIRE(heller_bound(7, 3, 3, 1, 2) == heller_direct(7, 3, 3, 1, 2, 10));
    REQUIRE(heller_bound(7, 3, 3, 1, 2) >= griesmer_conv(7, 3, 3, 1, 2));

    REQUIRE_THROWS_AS(heller_bound(5, 2, 6, 2, 2), std::invalid_argument);  // km < delta
    REQUIRE_THROWS_AS(heller_bound(5, 2, 2, 1, 6), std::invalid_argument);  // q not a prime power
}

TEST_CASE("Heller block specialization equals iterated Plotkin") {
    for (auto [n, k, q] : {std::tuple{7, 3, 2}, {13, 6, 2}, {6, 2, 3}, {9, 4, 4}}) {
        std::int64_t plotkin_min = -1;
        for (int i = 1; i <= 12; ++i) {
            const auto b = block_bounds(static_cast<long long>(n) * i, static_cast<long long>(k) * i, q);
            plotkin_min = plotkin_min < 0 ? b.plotkin : std::min(plotkin_min, b.plotkin);
        }
        REQUIRE(heller_bound(n, k, 0, 0, q) == plotkin_min);
    }
}

TEST_CASE("convolutional Griesmer bound spot values") {
    REQUIRE(griesmer_conv(5, 3, 4, 2, 2) == 6);
    REQUIRE(griesmer_conv(15, 4, 12, 3, 2) == 32);
    REQUIRE(griesmer_conv(9, 3, 1, 1, 8) == 8);
    REQUIRE(griesmer_conv(9, 3, 1, 1, 8) == singleton_generalized(9, 3, 1));
    // the inequalities alone admit d' = 12 here; the bound is capped by S = 10
    REQUIRE(griesmer_conv(5, 2, 3, 3, 8) == 10);
}

TEST_CASE("block bounds") {
    REQUIRE(block_bounds(13, 6, 2).griesmer == 5);
    for (auto [n, q] : {std::pair{5, 2}, {9, 3}, {7, 16}}) {
        const auto b = block_bounds(n, 1, q);
        REQUIRE(b.singleton == n);
        REQUIRE(b.plotkin == n);
        REQUIRE(b.griesmer == n);
    }
    // derived: enumerate d and test the ceiling sum directly
    {
        int best = 0;
        for (int d = 1; d <= 7; ++d) {
            int sum = 0;
            for (int l = 0; l < 4; ++l) sum += (d + (1 << l) - 1) / (1 << l);
            if (sum <= 7) best = d;
        }
        REQUIRE(best == 3);
        REQUIRE(block_bounds(7, 4, 2).griesmer == 3);
    }
}

TEST_CASE("MDS field size bound") {
    {
        const auto r = mds_min_field(3, 2, 3);  // km = delta + 1: bound 6/2
        REQUIRE(r.bound_num == 3);
        REQUIRE(r.bound_den == 1);
        REQUIRE(r.q_min == 3);
    }
    {
        const auto r = mds_min_field(3, 2, 2);  // km = delta: bound d = 5
        REQUIRE(r.bound_num == 5);
        REQUIRE(r.q_min == 5);
    }
    {
        const auto r = mds_min_field(3, 1, 3);  // k = 1: bound 12/3
        REQUIRE(r.bound_num == 4);
        REQUIRE(r.q_min == 4);
    }
    {
        const auto r = mds_min_field(9, 3, 1);  // km != delta + 1: bound d = 8
        REQUIRE(r.bound_num == 8);
        REQUIRE(r.q_min == 8);
    }
}

TEST_CASE("MDS flags") {
    {
        CodeProfile p{3, 1, 1, 1, 4, {1}, true, true};
        // M = 1 + 1 = 2; a code with d = 6 = S and d^c_2 = 6 is strongly MDS
        const auto f = mds_flags(p, 6, {2, 4, 6});
        REQUIRE(f.M == 2);
        REQUIRE(f.is_mds);
        REQUIRE(f.is_strongly_mds);
        REQUIRE(f.is_compact);
    }
    {
        CodeProfile p{5, 1, 2, 2, 16, {2}, true, true};
        const auto f = mds_flags(p, 15, {3, 9, 12, 15});
        REQUIRE(f.M == 3);
        REQUIRE(f.is_strongly_mds);
    }
    {
        // (5,2,6;4)_2 with d = 12 < S = 19; Forney indices 4,2 are not compact
        CodeProfile p{5, 2, 6, 4, 2, {2, 4}, true, true};
        const auto f = mds_flags(p, 12, std::vector<std::int64_t>(12, 12));
        REQUIRE(f.M == 5);
        REQUIRE_FALSE(f.is_mds);
        REQUIRE_FALSE(f.is_strongly_mds);
        REQUIRE_FALSE(f.is_compact);
    }
    {
        CodeProfile p{3, 1, 1, 1, 4, {1}, true, true};
        REQUIRE_THROWS_AS(mds_flags(p, 6, {2, 4}), std::invalid_argument);  // coldist too short
    }
}

TEST_CASE("bound ordering on a randomized parameter grid") {
    std::mt19937 rng(987654);
    const int qs[] = {2, 3, 4, 5, 7, 8, 9, 16};
    std::uniform_int_distribution<int> pick_q(0, 7), pick_n(2, 16), pick_delta(0, 12);
    int tested = 0;
    while (tested < 500) {
        const int q = qs[pick_q(rng)];
        const int n = pick_n(rng);
        if (n < 2) continue;
        std::uniform_int_distribution<int> pick_k(1, n - 1);
        const int k = pick_k(rng);
        const int delta = pick_delta(rng);
        int m = 0;
        if (delta > 0) {
            const int lo = (delta + k - 1) / k;
            std::uniform_int_distribution<int> pick_m(lo, delta);
            m = pick_m(rng);
        }
        const auto g = griesmer_conv(n, k, delta, m, q);
        const auto h = heller_bound(n, k, delta, m, q);
        const auto s = singleton_generalized(n, k, delta);
        REQUIRE(g <= h);
        REQUIRE(g <= s);
        REQUIRE(h <= heller_term(n, k, delta, m, q, (k * m == delta) ? 1 : 0));
        ++tested;
    }
}

TEST_CASE("block-case consistency of the convolutional Griesmer bound") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16})
        for (int n = 2; n <= 20; ++n)
            for (int k = 1; k < n; ++k) {
                const auto b = block_bounds(n, k, q);
                REQUIRE(griesmer_conv(n, k, 0, 0, q) == b.griesmer);
                REQUIRE(b.griesmer <= b.plotkin);
                REQUIRE(b.griesmer <= b.singleton);
            }
}

TEST_CASE("bounds report assembles the pieces") {
    const auto r = bounds_report(5, 3, 4, 2, 2);
    REQUIRE(r.griesmer == 6);
    REQUIRE(r.singleton_gen == 9);
    REQUIRE(r.griesmer <= r.heller);
    REQUIRE_FALSE(r.block.has_value());

    const auto rb = bounds_report(13, 6, 0, 0, 2);
    REQUIRE(rb.block.has_value());
    REQUIRE(rb.block->griesmer == 5);
}
