#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "crossfam/linitial.hpp"

using namespace crossfam;

TEST_CASE("partner: strong intersection at the last element") {
    CHECK(partner(KSet(9, {2, 5})) == KSet(9, {1, 3, 4, 5}));
    CHECK(partner(KSet(9, {1, 3, 4, 5})) == KSet(9, {2, 5}));
    CHECK(partner(KSet(6, {1})) == KSet(6, {1}));
    for (int n = 1; n <= 8; ++n)
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            std::vector<int> e;
            for (int x = 1; x <= n; ++x)
                if (mask & (1u << (x - 1))) e.push_back(x);
            KSet a(n, e);
            KSet b = partner(a);
            CHECK(partner(b) == a);  // involution
            CHECK(b.max() == a.max());
        }
}

TEST_CASE("normalize_id canonical forms") {
    const int n = 8, k = 3;
    // Tail run to n is redundant.
    CHECK(normalize_id(KSet(n, {2, 8}), k).id == KSet(n, {2}));
    CHECK(normalize_id(KSet(n, {2, 7, 8}), k).id == KSet(n, {2}));
    CHECK(normalize_id(KSet(n, {1, 7, 8}), k).id == KSet(n, {1}));
    // A short run ending at n denotes the full family.
    CHECK(normalize_id(KSet(n, {8}), k).id == KSet(n, {6, 7, 8}));
    CHECK(normalize_id(KSet(n, {7, 8}), k).id == KSet(n, {6, 7, 8}));
    // The last k-set itself is forced canonical.
    CHECK(normalize_id(KSet(n, {6, 7, 8}), k).id == KSet(n, {6, 7, 8}));
    // Over-long IDs are trimmed: the down-set of {1,3,4,5} among 3-sets is
    // exactly the supersets of {1,2}.
    CHECK(normalize_id(KSet(n, {1, 3, 4, 5}), k).id == KSet(n, {1, 2}));
    // No 1-set precedes {1,2}: the down-set is empty.
    CHECK(normalize_id(KSet(4, {1, 2}), 1).is_empty_family());
    // But {1} does precede {2,3}.
    CHECK(normalize_id(KSet(4, {2, 3}), 1).id == KSet(4, {1}));
}

TEST_CASE("normalize_id trims over-long IDs to the same down-set") {
    // The canonical ID must keep |L| unchanged and satisfy |id| <= k.
    for (int n = 4; n <= 7; ++n)
        for (int k = 1; k <= n - 1; ++k)
            for (unsigned mask = 1; mask < (1u << n); ++mask) {
                std::vector<int> e;
                for (int x = 1; x <= n; ++x)
                    if (mask & (1u << (x - 1))) e.push_back(x);
                KSet a(n, e);
                FamilyID fid = normalize_id(a, k);
                CHECK(fid.id.size() <= k);
                // Count k-sets lex-preceding the raw ID directly.
                long cnt = 0;
                for (const KSet& f : enumerate_lex(n, k))
                    if (lex_precedes_eq(f, a)) ++cnt;
                CHECK(size_from_id(fid) == cnt);
                if (!fid.is_empty_family())
                    CHECK(normalize_id(fid.id, k) == fid);  // idempotent
            }
}

TEST_CASE("size formulas: frozen values") {
    CHECK(linitial_size(KSet(9, {1}), 4) == binomial(8, 3));
    CHECK(linitial_size(KSet(10, {2, 3, 4, 5}), 4) == 85);
    CHECK(linitial_size(KSet(6, {1, 3}), 3) == 7);
    CHECK(linitial_size(KSet(6, {2}), 2) == 9);
    CHECK(linitial_size(KSet(4, {1, 4}), 2) == 3);
    CHECK(linitial_size(KSet(4, {1, 2, 3}), 2) == 0);
    CHECK(size_from_id_direct(FamilyID{KSet(10, {2, 3, 4, 5}), 4}) == 85);
    CHECK(size_from_id_direct(FamilyID{KSet(6, {1, 3}), 3}) == 7);
}

TEST_CASE("max_cross_id: partner family and emptiness criterion") {
    // P = {2}, a = 2: the maximal 3-uniform counterpart is L([6],{1,2},3).
    LInitialFamily mc = max_cross_id(KSet(6, {2}), 2, 3);
    CHECK(mc.fid.id == KSet(6, {1, 2}));
    CHECK(mc.size == binomial(4, 1));
    // min P > b means nothing intersects everything: empty.
    LInitialFamily none = max_cross_id(KSet(6, {3}), 2, 2);
    CHECK(none.fid.is_empty_family());
    CHECK(none.size == 0);
    CHECK_THROWS(max_cross_id(KSet::empty(6), 2, 2));
    CHECK_THROWS(max_cross_id(KSet(6, {1, 2, 3}), 2, 2));  // |P| > a
    CHECK_THROWS(max_cross_id(KSet(6, {1}), 3, 4));        // a + b > n
}

TEST_CASE("enumerate_family is the lex prefix of the stated size") {
    FamilyID fid = normalize_id(KSet(7, {2, 4}), 3);
    std::vector<KSet> fam = enumerate_family(fid);
    CHECK(Natural((long)fam.size()) == size_from_id(fid));
    for (std::size_t p = 0; p < fam.size(); ++p)
        CHECK(lex_precedes_eq(fam[p], fid.id));
}

TEST_CASE("are_cross_intersecting agrees with enumeration on a small grid") {
    const int n = 6;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; a + b <= n; ++b)
            for (long sa = 1; sa <= binomial(n, a).convert_to<long>(); ++sa)
                for (long sb = 1; sb <= binomial(n, b).convert_to<long>(); ++sb) {
                    FamilyID fa = normalize_id(lex_unrank(sa, n, a), a);
                    FamilyID fb = normalize_id(lex_unrank(sb, n, b), b);
                    LInitialFamily la{fa, size_from_id(fa)};
                    LInitialFamily lb{fb, size_from_id(fb)};
                    bool fast = are_cross_intersecting(la, lb);
                    bool slow = cross_intersecting_by_enumeration(
                        enumerate_family(fa), enumerate_family(fb));
                    CHECK(fast == slow);
                }
}
