#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "crossfam/kset.hpp"
#include "crossfam/natural.hpp"

using namespace crossfam;

TEST_CASE("binomial basics") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(9, 4) == 126);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(4, -1) == 0);
    CHECK(binomial(-2, 0) == 0);
    CHECK(binomial(300, 2) == 300 * 299 / 2);  // beyond the Pascal table
    CHECK(binomial(60, 30) == Natural("118264581564861424"));
}

TEST_CASE("KSet validation and accessors") {
    KSet s(6, {2, 3, 5});
    CHECK(s.size() == 3);
    CHECK(s.contains(3));
    CHECK(!s.contains(4));
    CHECK(s.min() == 2);
    CHECK(s.max() == 5);
    CHECK(s.mask() == 0b10110);
    CHECK(s.to_string() == "2,3,5");
    CHECK(KSet::parse("2,3,5", 6) == s);
    CHECK_THROWS(KSet(4, {0, 1}));
    CHECK_THROWS(KSet(4, {3, 3}));
    CHECK_THROWS(KSet(4, {5}));
}

TEST_CASE("lex order: supersets precede, else smallest difference wins") {
    const int n = 6;
    auto prec = [&](std::vector<int> a, std::vector<int> b) {
        return lex_precedes_eq(KSet(n, a), KSet(n, b));
    };
    CHECK(prec({1, 2}, {1, 2}));       // reflexive
    CHECK(prec({1, 2, 3}, {1, 2}));    // superset precedes
    CHECK(!prec({1, 2}, {1, 2, 3}));   // proper subset follows
    CHECK(prec({1, 5}, {2, 3}));
    CHECK(!prec({2, 3}, {1, 5}));
    CHECK(prec({1, 2}, {1, 5}));
    CHECK(prec({2}, {3, 4, 5}));
}

TEST_CASE("rank/unrank round-trip matches enumeration order") {
    for (int n = 1; n <= 7; ++n) {
        for (int k = 1; k <= n; ++k) {
            std::vector<KSet> all = enumerate_lex(n, k);
            REQUIRE(Natural((long)all.size()) == binomial(n, k));
            for (std::size_t p = 0; p < all.size(); ++p) {
                CHECK(lex_rank(all[p], n, k) == (long)p + 1);
                CHECK(lex_unrank(Natural((long)p + 1), n, k) == all[p]);
                if (p > 0) CHECK(lex_precedes_eq(all[p - 1], all[p]));
            }
        }
    }
}

TEST_CASE("first and last k-sets") {
    CHECK(lex_unrank(1, 7, 3) == KSet(7, {1, 2, 3}));
    CHECK(lex_unrank(binomial(7, 3), 7, 3) == KSet(7, {5, 6, 7}));
    CHECK_THROWS(lex_unrank(0, 7, 3));
    CHECK_THROWS(lex_unrank(binomial(7, 3) + 1, 7, 3));
}
