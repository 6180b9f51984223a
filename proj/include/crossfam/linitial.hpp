#pragma once

#include <vector>

#include "crossfam/kset.hpp"
#include "crossfam/natural.hpp"

namespace crossfam {

/// Canonical identifier of an L-initial family L([n], R, k): the family of
/// all k-subsets of [n] lex-preceding-or-equal to R. The empty family is
/// represented by the reserved empty-id sentinel.
struct FamilyID {
    KSet id;  // canonical: |id| <= k, no suffix running up to n unless forced
    int k = 0;

    int n() const { return id.n; }
    bool is_empty_family() const { return id.is_empty(); }

    bool operator==(const FamilyID& other) const {
        return id == other.id && k == other.k;
    }
};

/// An L-initial family as a value: canonical ID plus its cached exact size.
struct LInitialFamily {
    FamilyID fid;
    Natural size;
};

/// The unique B with A ∩ B = {q} and A ∪ B = [q], q = max A ("A and B
/// strongly intersect at their last element"). Involution on non-empty sets.
KSet partner(const KSet& a);

/// Canonicalizes an arbitrary non-empty ID: trims over-long IDs down to at
/// most k elements, then strips any tail run ending at n, iterating to a
/// fixpoint. Returns the empty-family sentinel when the lex down-set of
/// k-sets is empty and no canonical form exists.
FamilyID normalize_id(const KSet& a, int k);

/// |L([n], A, k)| for an arbitrary non-empty ID A, via the partner-sum
/// formula. Canonicalization does not change the value.
Natural linitial_size(const KSet& a, int k);

/// Size via the partner-sum formula.
Natural size_from_id(const FamilyID& fid);

/// Size via the gap-sum formula (independent code path, kept permanently as
/// a cross-check of size_from_id).
Natural size_from_id_direct(const FamilyID& fid);

/// The maximum b-uniform L-initial family cross-intersecting to
/// L([n], P, a): L([n], Q, b) with Q = partner(P). Empty iff min P > b.
/// Requires non-empty P, |P| <= a, a + b <= n.
LInitialFamily max_cross_id(const KSet& p, int a, int b);

/// True iff every member of F intersects every member of G. Fast path via
/// the maximal-counterpart size threshold; families with k_F + k_G > n are
/// automatically cross-intersecting.
bool are_cross_intersecting(const LInitialFamily& f, const LInitialFamily& g);

/// The first `size` k-sets of [n] in lex order (the family itself).
std::vector<KSet> enumerate_family(const FamilyID& fid);

/// {[n] \ F : F in fam}; explicit, not L-initial in general.
std::vector<KSet> complement_family(const std::vector<KSet>& fam);

/// Exhaustive pairwise check on explicit families; test/oracle fallback.
bool cross_intersecting_by_enumeration(const std::vector<KSet>& f,
                                       const std::vector<KSet>& g);

}  // namespace crossfam
