#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "crossfam/natural.hpp"

namespace crossfam {

/// A finite subset of the ground set [n] = {1, ..., n}, stored in strictly
/// increasing order. The ground set is 1-indexed throughout.
struct KSet {
    int n = 0;
    std::vector<int> elems;  // strictly increasing, each in [1, n]

    KSet() = default;
    /// Validates the invariants; throws std::invalid_argument on violation.
    KSet(int ground, std::vector<int> elements);

    static KSet empty(int ground) { return KSet(ground, {}); }

    int size() const { return static_cast<int>(elems.size()); }
    bool is_empty() const { return elems.empty(); }
    bool contains(int x) const;
    int min() const;  // throws on empty
    int max() const;  // throws on empty

    /// Dense bitmask (bit x-1 set iff x in the set); requires n <= 64.
    std::uint64_t mask() const;

    /// "a1,a2,a3" ascending; "" for the empty set.
    std::string to_string() const;
    static KSet parse(const std::string& text, int ground);

    bool operator==(const KSet& other) const {
        return n == other.n && elems == other.elems;
    }
};

enum class LexOrder {
    PrecedesOrEqual,   // A ≺ B (reflexive: A ≺ A)
    StrictlyFollows,
};

/// Lex order on subsets: A ≺ B iff A ⊇ B or min(A\B) < min(B\A).
LexOrder lex_compare(const KSet& a, const KSet& b);

inline bool lex_precedes_eq(const KSet& a, const KSet& b) {
    return lex_compare(a, b) == LexOrder::PrecedesOrEqual;
}

/// 1-indexed rank of the k-set R among all k-subsets of [n] in lex order;
/// {1,...,k} has rank 1. The rank equals |L([n], R, k)|.
Natural lex_rank(const KSet& r, int n, int k);

/// Inverse of lex_rank; requires 1 <= rank <= C(n, k).
KSet lex_unrank(const Natural& rank, int n, int k);

/// Visits all C(n, k) k-subsets of [n] in lex order.
void for_each_lex(int n, int k, const std::function<void(const KSet&)>& fn);

std::vector<KSet> enumerate_lex(int n, int k);

}  // namespace crossfam
