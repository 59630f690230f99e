#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "convcode/catalog.hpp"
#include "convcode/skew.hpp"

using namespace convcode;

namespace {

std::shared_ptr<const Automorphism> make_sigma(const AlgebraPtr& alg, const std::string& image) {
    return std::make_shared<const Automorphism>(Automorphism(parse_algebra_element(*alg, image)));
}

AlgebraElement random_element(const Algebra& alg, std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(0, alg.field().size() - 1);
    std::vector<Field::Value> c(alg.n());
    for (auto& v : c) v = static_cast<Field::Value>(coeff(rng));
    return {alg, c};
}

SkewPoly random_skew(const std::shared_ptr<const Automorphism>& sigma, int maxdeg, std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, maxdeg);
    std::vector<AlgebraElement> c;
    const int d = deg(rng);
    for (int j = 0; j <= d; ++j) c.push_back(random_element(sigma->algebra(), rng));
    return SkewPoly(sigma, std::move(c));
}

}  // namespace

TEST_CASE("automorphism validation") {
    auto f2 = Field::get(2, 1);
    auto a7 = Algebra::get(f2, 7);
    REQUIRE(validate_automorphism(AlgebraElement::x_power(*a7, 1)));  // identity
    REQUIRE(validate_automorphism(AlgebraElement::x_power(*a7, 5)));
    REQUIRE_FALSE(validate_automorphism(AlgebraElement::one(*a7)));  // powers all equal 1
    REQUIRE_FALSE(validate_automorphism(AlgebraElement::zero(*a7)));

    REQUIRE_THROWS_AS(Algebra::get(f2, 4), std::invalid_argument);  // gcd(n, q) != 1
}

TEST_CASE("automorphism enumeration") {
    auto f2 = Field::get(2, 1);
    auto a7 = Algebra::get(f2, 7);
    const auto all = enumerate_automorphisms(*a7);
    REQUIRE(all.size() == 18);
    // x itself is always present
    bool has_x = false;
    for (const auto& a : all) has_x = has_x || a == AlgebraElement::x_power(*a7, 1);
    REQUIRE(has_x);

    auto f4 = Field::get(2, 2);
    auto a3 = Algebra::get(f4, 3);
    const auto all3 = enumerate_automorphisms(*a3);
    const auto alpha2x = parse_algebra_element(*a3, "a^2*x");
    bool found = false;
    for (const auto& a : all3) found = found || a == alpha2x;
    REQUIRE(found);
}

TEST_CASE("applying an automorphism") {
    auto f2 = Field::get(2, 1);
    auto a7 = Algebra::get(f2, 7);
    auto sigma = make_sigma(a7, "x^5");

    // x^2 -> x^10 = x^3 mod x^7 - 1
    REQUIRE((*sigma)(AlgebraElement::x_power(*a7, 2)) == AlgebraElement::x_power(*a7, 3));
    REQUIRE((*sigma)(parse_algebra_element(*a7, "1+x")) == parse_algebra_element(*a7, "1+x^5"));
    REQUIRE((*sigma)(AlgebraElement::one(*a7)) == AlgebraElement::one(*a7));

    auto ident = make_sigma(a7, "x");
    std::mt19937 rng(5);
    for (int t = 0; t < 50; ++t) {
        const auto v = random_element(*a7, rng);
        REQUIRE((*ident)(v) == v);
    }
}

TEST_CASE("skew multiplication reproduces the worked length-7 example") {
    auto f2 = Field::get(2, 1);
    auto a7 = Algebra::get(f2, 7);
    auto sigma = make_sigma(a7, "x^5");
    const auto g = parse_skew_poly(sigma, "1+x^2+x^3+x^4 + z*(x+x^2+x^3+x^5)");

    const auto x = AlgebraElement::x_power(*a7, 1);
    const auto xg = left_mul(x, g);
    REQUIRE(xg == parse_skew_poly(sigma, "x+x^3+x^4+x^5 + z*(1+x+x^3+x^6)"));

    const auto x2g = left_mul(x, xg);
    REQUIRE(x2g == parse_skew_poly(sigma, "x^2+x^4+x^5+x^6 + z*(x+x^4+x^5+x^6)"));

    // x^3 g = g + x^2 g
    const auto x3g = left_mul(x, x2g);
    REQUIRE(x3g == g + x2g);
}

TEST_CASE("identity twist gives the commutative product") {
    auto f2 = Field::get(2, 1);
    auto a7 = Algebra::get(f2, 7);
    auto ident = make_sigma(a7, "x");
    std::mt19937 rng(11);
    for (int t = 0; t < 50; ++t) {
        const auto f = random_skew(ident, 3, rng);
        const auto g = random_skew(ident, 3, rng);
        REQUIRE(f * g == g * f);
    }
}

TEST_CASE("the defining rule a z = z sigma(a)") {
    std::mt19937 rng(17);
    struct Case {
        int p, m, n;
        const char* sigma;
    };
    for (const auto& c : {Case{2, 1, 7, "x^5"}, Case{2, 2, 3, "a^2*x"}, Case{2, 4, 5, "x^3"}}) {
        auto alg = Algebra::get(Field::get(c.p, c.m), c.n);
        auto sigma = make_sigma(alg, c.sigma);
        const SkewPoly z(sigma, {AlgebraElement::zero(*alg), AlgebraElement::one(*alg)});
        for (int t = 0; t < 100; ++t) {
            const auto a = random_element(*alg, rng);
            const SkewPoly left = SkewPoly(sigma, {a}) * z;
            const SkewPoly right = z * SkewPoly(sigma, {(*sigma)(a)});
            REQUIRE(left == right);
        }
    }
}

TEST_CASE("skew ring laws on random triples") {
    std::mt19937 rng(23);
    struct Case {
        int p, m, n;
        const char* sigma;
    };
    for (const auto& c : {Case{2, 1, 7, "x^5"}, Case{2, 2, 3, "a^2*x"}, Case{2, 4, 5, "x^3"}}) {
        auto alg = Algebra::get(Field::get(c.p, c.m), c.n);
        auto sigma = make_sigma(alg, c.sigma);
        for (int t = 0; t < 200; ++t) {
            const auto f = random_skew(sigma, 2, rng);
            const auto g = random_skew(sigma, 2, rng);
            const auto h = random_skew(sigma, 2, rng);
            REQUIRE((f * g) * h == f * (g * h));
            REQUIRE(f * (g + h) == f * g + f * h);
            REQUIRE((f + g) * h == f * h + g * h);
        }
    }
}

TEST_CASE("p is an isomorphism of left F[z]-modules") {
    std::mt19937 rng(29);
    auto f2 = Field::get(2, 1);
    auto a7 = Algebra::get(f2, 7);
    auto sigma = make_sigma(a7, "x^5");
    std::uniform_int_distribution<int> bit(0, 1), deg(0, 4);
    auto random_vec = [&] {
        std::vector<Poly> v;
        for (int j = 0; j < 7; ++j) {
            std::vector<Field::Value> c(deg(rng) + 1);
            for (auto& x : c) x = static_cast<Field::Value>(bit(rng));
            v.emplace_back(*f2, std::move(c));
        }
        return v;
    };
    const Poly z = Poly::monomial(*f2, 1, 1);
    for (int t = 0; t < 100; ++t) {
        const auto u = random_vec();
        const auto w = random_vec();
        std::vector<Poly> sum, zu;
        for (int j = 0; j < 7; ++j) {
            sum.push_back(u[j] + w[j]);
            zu.push_back(u[j] * z);
        }
        REQUIRE(p_map(sum, sigma) == p_map(u, sigma) + p_map(w, sigma));
        const SkewPoly zs(sigma, {AlgebraElement::zero(*a7), AlgebraElement::one(*a7)});
        REQUIRE(p_map(zu, sigma) == zs * p_map(u, sigma));
        REQUIRE(p_inverse(p_map(u, sigma)) == u);
    }
}

TEST_CASE("sigma circulant") {
    auto f2 = Field::get(2, 1);
    auto a7 = Algebra::get(f2, 7);
    auto sigma = make_sigma(a7, "x^5");

    // g = 1: rows are the unit vectors
    const auto one = SkewPoly(sigma, {AlgebraElement::one(*a7)});
    REQUIRE(sigma_circulant(one) == PolyMatrix::identity(*f2, 7));

    const auto g = parse_skew_poly(sigma, "1+x^2+x^3+x^4 + z*(x+x^2+x^3+x^5)");
    const auto circ = sigma_circulant(g);
    const auto& g1 = catalog_get("(7,3,3;1)_2").matrix;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 7; ++j) REQUIRE(circ.at(i, j) == g1.at(i, j));

    // p(u M^sigma(g)) = p(u) g
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> bit(0, 1), deg(0, 3);
    for (int t = 0; t < 100; ++t) {
        std::vector<Poly> u;
        for (int j = 0; j < 7; ++j) {
            std::vector<Field::Value> c(deg(rng) + 1);
            for (auto& x : c) x = static_cast<Field::Value>(bit(rng));
            u.emplace_back(*f2, std::move(c));
        }
        REQUIRE(p_map(row_vec_mul(u, circ), sigma) == p_map(u, sigma) * g);
    }
}

TEST_CASE("ideal generator matrix reproduces the worked example") {
    auto f2 = Field::get(2, 1);
    auto a7 = Algebra::get(f2, 7);
    auto sigma = make_sigma(a7, "x^5");
    const auto g = parse_skew_poly(sigma, "1+x^2+x^3+x^4 + z*(x+x^2+x^3+x^5)");
    const auto G = ideal_generator_matrix(g);
    REQUIRE(G.has_value());
    REQUIRE(*G == catalog_get("(7,3,3;1)_2").matrix);  // same rows, same order

    // g = 1 generates everything
    const auto full = ideal_generator_matrix(SkewPoly(sigma, {AlgebraElement::one(*a7)}));
    REQUIRE(full.has_value());
    REQUIRE(*full == PolyMatrix::identity(*f2, 7));

    REQUIRE_THROWS_AS(ideal_generator_matrix(SkewPoly(sigma)), std::invalid_argument);
}

TEST_CASE("one-dimensional table code rebuilds from its row") {
    const auto& e = catalog_get("(3,1,1;1)_4");
    auto alg = Algebra::get(field_ptr(e.matrix.field()), 3);
    auto sigma = make_sigma(alg, *e.sigma);
    const auto g = p_map(e.matrix.row(0), sigma);
    const auto G = ideal_generator_matrix(g);
    REQUIRE(G.has_value());
    REQUIRE(*G == e.matrix);
}

TEST_CASE("sigma-cyclicity") {
    const auto& e = catalog_get("(7,3,3;1)_2");
    auto alg = Algebra::get(field_ptr(e.matrix.field()), 7);
    REQUIRE(is_sigma_cyclic(e.matrix, make_sigma(alg, "x^5")));
    // under the identity the code would have to be a block code
    REQUIRE_FALSE(is_sigma_cyclic(e.matrix, make_sigma(alg, "x")));

    auto f2 = Field::get(2, 1);
    PolyMatrix bad(*f2, 1, 7);
    bad.at(0, 0) = Poly::monomial(*f2, 1, 1);
    bad.at(0, 1) = Poly::monomial(*f2, 1, 2);
    REQUIRE_THROWS_AS(is_sigma_cyclic(bad, make_sigma(alg, "x^5")), std::invalid_argument);
}

TEST_CASE("skew polynomial text round trip") {
    auto f2 = Field::get(2, 1);
    auto a7 = Algebra::get(f2, 7);
    auto sigma = make_sigma(a7, "x^5");
    const auto g = parse_skew_poly(sigma, "1+x^2+x^3+x^4 + z*(x+x^2+x^3+x^5)");
    REQUIRE(parse_skew_poly(sigma, g.str()) == g);
    REQUIRE_THROWS_AS(parse_skew_poly(sigma, "z*x"), std::invalid_argument);  // parens required
}
