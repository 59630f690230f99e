// Print Griesmer/Heller/Singleton bounds over a small parameter grid, the
// kind of table you scan when hunting for new codes.

#include <cstdio>

#include "convcode/bounds.hpp"

using namespace convcode;

int main() {
    const int q = 2;
    std::printf("bounds over GF(%d), compact memory (m = ceil(delta/k))\n\n", q);
    std::printf("%-14s %9s %8s %8s\n", "(n,k,delta;m)", "singleton", "heller", "griesmer");
    for (int n = 3; n <= 8; ++n)
        for (int k = 1; k < n; ++k)
            for (int delta = 1; delta <= 6; ++delta) {
                const int m = (delta + k - 1) / k;
                const auto r = bounds_report(n, k, delta, m, q);
                std::printf("(%d,%d,%d;%d)      %9lld %8lld %8lld%s\n", n, k, delta, m,
                            (long long)r.singleton_gen, (long long)r.heller, (long long)r.griesmer,
                            r.griesmer == r.singleton_gen ? "  <- MDS possible" : "");
            }
    return 0;
}
