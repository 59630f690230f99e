// Build a sigma-cyclic code from a generator polynomial of the skew ring
// A[z;sigma], A = GF(2)[x]/(x^7 - 1), and measure it.

#include <cstdio>

#include "convcode/convcode.hpp"

using namespace convcode;

int main() {
    auto f2 = Field::get(2, 1);
    auto alg = Algebra::get(f2, 7);

    const auto autos = enumerate_automorphisms(*alg);
    std::printf("automorphisms of GF(2)[x]/(x^7-1): %zu\n", autos.size());

    auto sigma = std::make_shared<const Automorphism>(
        Automorphism(parse_algebra_element(*alg, "x^5")));
    const auto g = parse_skew_poly(sigma, "1+x^2+x^3+x^4 + z*(x+x^2+x^3+x^5)");
    std::printf("g = %s with sigma(x) = x^5\n\n", g.str().c_str());

    const auto G = ideal_generator_matrix(g);
    if (!G) {
        std::printf("the left ideal is not the polynomial part of a code\n");
        return 1;
    }
    std::printf("generator matrix:\n%s\n", write_matrix_body(*G).c_str());

    const auto p = profile(*G);
    const auto rep = distance_report(*G, 2 * (p.delta + 5));
    std::printf("profile %s, d_free = %lld, griesmer = %lld, stabilizes at d^c_%d\n",
                p.id().c_str(), (long long)rep.d_free,
                (long long)griesmer_conv(p.n, p.k, p.delta, p.memory, p.q),
                rep.stabilization_index.value_or(-1));
    std::printf("sigma-cyclic: %s\n", is_sigma_cyclic(*G, sigma) ? "yes" : "no");
    return 0;
}
