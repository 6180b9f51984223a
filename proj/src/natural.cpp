#include "crossfam/natural.hpp"

#include <vector>

namespace crossfam {

namespace {

constexpr long kTableMax = 256;

// Row-triangular Pascal table, built once. Static local init is
// thread-safe, and the table is immutable afterwards.
const std::vector<std::vector<Natural>>& pascal_table() {
    static const std::vector<std::vector<Natural>> table = [] {
        std::vector<std::vector<Natural>> t(kTableMax + 1);
        for (long a = 0; a <= kTableMax; ++a) {
            t[a].resize(a + 1);
            t[a][0] = 1;
            t[a][a] = 1;
            for (long b = 1; b < a; ++b) {
                t[a][b] = t[a - 1][b - 1] + t[a - 1][b];
            }
        }
        return t;
    }();
    return table;
}

}  // namespace

Natural binomial(long a, long b) {
    if (a < 0 || b < 0 || b > a) return 0;
    if (a <= kTableMax) return pascal_table()[a][b];
    // Multiplicative fallback for a beyond the table.
    if (b > a - b) b = a - b;
    Natural r = 1;
    for (long j = 1; j <= b; ++j) {
        r *= a - b + j;
        r /= j;
    }
    return r;
}

}  // namespace crossfam
