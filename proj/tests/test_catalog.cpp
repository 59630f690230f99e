#include <catch2/catch_amalgamated.hpp>
#include <random>
#include <sstream>

#include "convcode/catalog.hpp"

using namespace convcode;

TEST_CASE("catalog shape") {
    const auto& all = catalog();
    REQUIRE(all.size() == 42);
    int t1 = 0, t2 = 0, t3 = 0;
    for (const auto& e : all) {
        if (e.table == "I") ++t1;
        if (e.table == "II") ++t2;
        if (e.table == "III") ++t3;
    }
    REQUIRE(t1 == 12);
    REQUIRE(t2 == 18);
    REQUIRE(t3 == 12);

    REQUIRE(catalog_get("(7,3,3;1)_2").cyclic);
    REQUIRE(catalog_get("(7,3,3;1)_2").expected_g == 8);
    REQUIRE(catalog_get("(7,3,3;1)_2").sigma == "x^5");
    REQUIRE(catalog_get("(3,2,2;1)_5").mds_star);
    REQUIRE(catalog_get("(3,2,2;1)_5").mds_bullet);
    REQUIRE(catalog_get("(8,4,4;1)_2").recipe.has_value());
    REQUIRE(catalog_get("(8,4,4;1)_2").recipe->cols == std::vector<int>{1, 2, 4, 5, 8, 11, 13, 14});
    REQUIRE(catalog_get("(8,4,4;1)_2").evenness == Evenness::not_even);
    REQUIRE_FALSE(catalog_get("(15,4,12;3)_2").expected_coldist_index.has_value());
    REQUIRE_THROWS_AS(catalog_get("no-such-id"), std::invalid_argument);
}

TEST_CASE("every catalog entry verifies") {
    for (const auto& e : catalog()) {
        const auto rep = verify(e);
        INFO(e.id);
        for (const auto& c : rep.checks) {
            INFO(c.name << ": expected " << c.expected << ", computed " << c.computed);
            CHECK(c.pass);
        }
        REQUIRE(rep.all_pass);
    }
}

TEST_CASE("spot verification values") {
    {
        const auto rep = verify(catalog_get("(5,3,4;2)_2"));
        REQUIRE(rep.griesmer == 6);
        REQUIRE(rep.d_free == 6);
        REQUIRE(rep.stabilization_index == 7);
        REQUIRE(rep.evenness_verdict == "not even");
    }
    {
        const auto rep = verify(catalog_get("(3,1,4;4)_4"));
        REQUIRE(rep.griesmer == 14);
        REQUIRE(rep.d_free == 14);
        REQUIRE(rep.griesmer < singleton_generalized(3, 1, 4));  // not MDS
    }
    {
        const auto rep = verify(catalog_get("(12,4,4;1)_2"));
        REQUIRE(rep.griesmer == 12);
        REQUIRE(rep.d_free == 12);
        REQUIRE(rep.evenness_verdict == "even");
    }
}

TEST_CASE("MDS annotations") {
    for (const auto& e : catalog()) {
        if (!e.mds_star) continue;
        REQUIRE(e.expected_g == singleton_generalized(e.n, e.k, e.delta));
        if (e.mds_bullet) REQUIRE(mds_min_field(e.n, e.k, e.delta).q_min == e.q);
    }
}

TEST_CASE("nested code chains truncate exactly") {
    auto chain = [](const char* big, const char* small, int keep_deg) {
        const auto& b = catalog_get(big);
        const auto& s = catalog_get(small);
        REQUIRE(b.matrix.truncated(keep_deg) == s.matrix);
    };
    chain("(7,3,9;3)_2", "(7,3,6;2)_2", 2);
    chain("(7,3,6;2)_2", "(7,3,3;1)_2", 1);
    chain("(3,1,5;5)_4", "(3,1,4;4)_4", 4);
    chain("(3,1,4;4)_4", "(3,1,3;3)_4", 3);
    chain("(3,1,3;3)_4", "(3,1,2;2)_4", 2);
    chain("(3,1,2;2)_4", "(3,1,1;1)_4", 1);
    chain("(5,2,4;2)_4", "(5,2,2;1)_4", 1);
}

TEST_CASE("table III recipes reproduce the stored matrices") {
    for (const auto& e : catalog()) {
        if (!e.recipe) continue;
        const auto base = catalog_base_matrix(e.recipe->base);
        REQUIRE(puncture(base, e.recipe->cols) == e.matrix);
        const auto p = profile(e.matrix);
        REQUIRE(p.basic);
        REQUIRE(p.minimal);
    }
}

TEST_CASE("matrix files round trip byte-for-byte") {
    for (const auto& e : catalog()) {
        const std::string text = write_matrix_file(e.matrix);
        const auto back = parse_matrix_file(text);
        REQUIRE(back.field.get() == &e.matrix.field());
        REQUIRE(back.matrix == e.matrix);
        REQUIRE(write_matrix_file(back.matrix) == text);
    }
}

TEST_CASE("membership round trips on every catalog matrix") {
    std::mt19937 rng(20250811);
    for (const auto& e : catalog()) {
        const auto h = right_inverse(e.matrix);
        REQUIRE(h.has_value());
        const Field& f = e.matrix.field();
        std::uniform_int_distribution<int> coeff(0, f.size() - 1), deg(0, 5);
        for (int t = 0; t < 1000; ++t) {
            std::vector<Poly> u;
            for (int i = 0; i < e.k; ++i) {
                std::vector<Field::Value> c(deg(rng) + 1);
                for (auto& v : c) v = static_cast<Field::Value>(coeff(rng));
                u.emplace_back(f, std::move(c));
            }
            const auto w = row_vec_mul(u, e.matrix);
            const auto back = membership(w, e.matrix, *h);
            REQUIRE(back.has_value());
            REQUIRE(*back == u);
        }
    }
}

TEST_CASE("identity twist never yields cyclic structure with positive complexity") {
    for (const auto& e : catalog()) {
        if (!e.cyclic || e.delta == 0) continue;
        auto alg = Algebra::get(field_ptr(e.matrix.field()), e.n);
        auto ident = std::make_shared<const Automorphism>(
            Automorphism(AlgebraElement::x_power(*alg, 1)));
        REQUIRE_FALSE(is_sigma_cyclic(e.matrix, ident));
    }
}
