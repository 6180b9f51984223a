#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace crossfam {

/// A problem shape (n, k_1 >= k_2 >= ... >= k_t) with t >= 2 families and
/// n >= k_1 + k_2. Family indices are 1-based throughout the public surface.
struct ProblemInstance {
    int n = 0;
    std::vector<int> ks;  // descending

    ProblemInstance() = default;
    ProblemInstance(int ground, std::vector<int> uniformities)
        : n(ground), ks(std::move(uniformities)) {
        if (ks.size() < 2)
            throw std::invalid_argument("instance: need t >= 2 families");
        for (std::size_t j = 1; j < ks.size(); ++j)
            if (ks[j] > ks[j - 1])
                throw std::invalid_argument("instance: need k_1 >= ... >= k_t");
        if (ks.back() < 1)
            throw std::invalid_argument("instance: need k_t >= 1");
        if (n < ks[0] + ks[1])
            throw std::invalid_argument("instance: need n >= k_1 + k_2");
    }

    int t() const { return static_cast<int>(ks.size()); }
    int k(int i) const { return ks.at(i - 1); }  // 1-based

    /// True in the t = 2, n = k_1 + k_2 regime, where feasibility reduces to
    /// avoiding exact complements.
    bool degenerate() const { return t() == 2 && n == ks[0] + ks[1]; }

    /// m = min_{j != i} k_j (1-based i).
    int m(int i) const {
        int best = -1;
        for (int j = 1; j <= t(); ++j)
            if (j != i) best = best < 0 ? k(j) : std::min(best, k(j));
        return best;
    }

    /// l = max_{j != i} k_j (1-based i).
    int l(int i) const {
        int best = 0;
        for (int j = 1; j <= t(); ++j)
            if (j != i) best = std::max(best, k(j));
        return best;
    }
};

}  // namespace crossfam
