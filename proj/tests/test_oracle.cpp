#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "crossfam/oracle.hpp"

using namespace crossfam;

TEST_CASE("linitial_search spot optima") {
    {
        OracleResult r = linitial_search(ProblemInstance(4, {2, 2}));
        CHECK(r.optimum == 6);
    }
    {
        OracleResult r = linitial_search(ProblemInstance(9, {4, 3, 2}));
        CHECK(r.optimum == 99);
        REQUIRE(!r.witnesses.empty());
        CHECK(r.witnesses.front() == std::vector<Natural>{91, 7, 1});
        REQUIRE(r.matched_case.has_value());
        CHECK(*r.matched_case == "star-T");
    }
    {
        // Beyond the default budget; the search itself is tiny after pruning.
        OracleResult r =
            linitial_search(ProblemInstance(20, {3, 3, 3}), 2'000'000'000);
        CHECK(r.optimum == Natural(3) * binomial(19, 2));  // 513
        CHECK(r.optimum == 513);
    }
    CHECK_THROWS_AS(linitial_search(ProblemInstance(20, {3, 3, 3})),
                    BudgetExceeded);
}

TEST_CASE("every witness is feasible") {
    for (auto [n, ks] : std::vector<std::pair<int, std::vector<int>>>{
             {7, {3, 3}}, {8, {4, 3}}, {7, {3, 2, 2}}}) {
        ProblemInstance inst(n, ks);
        OracleResult r = linitial_search(inst);
        CHECK(r.optimum == theorem_bound(inst).bound);
        for (const auto& w : r.witnesses) {
            CHECK(pairwise_threshold_feasible(w, inst));
            Natural total = 0;
            for (const Natural& s : w) total += s;
            CHECK(total == r.optimum);
        }
    }
}

TEST_CASE("micro oracle: enumeration path") {
    {
        OracleResult r = micro_search_t2(5, 2, 2);
        CHECK(r.method == "subset-enumeration");
        CHECK(r.optimum == 8);
    }
    {
        // Degenerate regime: every proper non-empty A_1 attains the optimum.
        OracleResult r = micro_search_t2(4, 2, 2);
        CHECK(r.optimum == 6);
        CHECK(r.maximizer_count == (1 << 6) - 2);
    }
    {
        OracleResult r = micro_search_t2(6, 3, 3);
        CHECK(r.optimum == theorem_bound(ProblemInstance(6, {3, 3})).bound);
    }
}

TEST_CASE("micro oracle: matching path agrees with the restricted search") {
    OracleResult r = micro_search_t2(7, 3, 3);
    CHECK(r.method == "matching-deficiency");
    CHECK(r.optimum == 32);
    CHECK(r.optimum == theorem_bound(ProblemInstance(7, {3, 3})).bound);
    REQUIRE(!r.witnesses.empty());

    OracleResult s = micro_search_t2(7, 3, 2);
    CHECK(s.optimum == theorem_bound(ProblemInstance(7, {3, 2})).bound);
}

TEST_CASE("pairwise_threshold_feasible") {
    ProblemInstance inst(9, {4, 3, 2});
    std::vector<Natural> stars = {binomial(8, 3), binomial(8, 2), binomial(8, 1)};
    CHECK(pairwise_threshold_feasible(stars, inst));
    CHECK(pairwise_threshold_feasible({91, 7, 1}, inst));
    CHECK(!pairwise_threshold_feasible({binomial(9, 4), 1, 1}, inst));
    CHECK_THROWS(pairwise_threshold_feasible({0, 1, 1}, inst));
    // Symmetric under swapping equal-k families.
    ProblemInstance eq(8, {3, 3});
    for (long s1 = 1; s1 <= 56; s1 += 11)
        for (long s2 = 1; s2 <= 56; s2 += 7)
            CHECK(pairwise_threshold_feasible({Natural(s1), Natural(s2)}, eq) ==
                  pairwise_threshold_feasible({Natural(s2), Natural(s1)}, eq));
}
