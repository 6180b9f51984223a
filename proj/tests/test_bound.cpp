#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "crossfam/bound.hpp"

using namespace crossfam;

TEST_CASE("theorem_bound spot values") {
    BoundResult b = theorem_bound(ProblemInstance(9, {4, 3, 2}));
    CHECK(b.cover_branch == 99);
    CHECK(b.star_branch == 92);
    CHECK(b.bound == 99);
    CHECK(b.cover_attains);
    CHECK(!b.star_attains);

    BoundResult tie = theorem_bound(ProblemInstance(4, {2, 2}));
    CHECK(tie.bound == 6);
    CHECK(tie.cover_attains);
    CHECK(tie.star_attains);

    // In the degenerate two-family regime both branches collapse to C(n,k1).
    for (int k1 = 1; k1 <= 5; ++k1)
        for (int k2 = 1; k2 <= k1; ++k2) {
            BoundResult d = theorem_bound(ProblemInstance(k1 + k2, {k1, k2}));
            CHECK(d.cover_branch == binomial(k1 + k2, k1));
            CHECK(d.star_branch == binomial(k1 + k2, k1));
        }
    CHECK_THROWS(ProblemInstance(4, {3, 2}));  // n < k_1 + k_2
    CHECK_THROWS(ProblemInstance(6, {2, 3}));  // not descending
    CHECK_THROWS(ProblemInstance(6, std::vector<int>{3}));  // t < 2
}

TEST_CASE("id_space endpoints and count") {
    ProblemInstance inst(6, {3, 2});
    std::vector<FamilyID> ids = id_space(inst, 1);
    REQUIRE(ids.size() == 7);  // Z = C(4,2) = 6
    CHECK(ids.front().id == KSet(6, {1}));
    CHECK(ids[1].id == KSet(6, {2, 3, 4}));
    CHECK(ids.back().id == KSet(6, {2}));  // m = 2
    // m = 1 collapses the space to the single ID {1}.
    ProblemInstance one(7, {3, 1});
    std::vector<FamilyID> solo = id_space(one, 1);
    REQUIRE(solo.size() == 1);
    CHECK(solo.front().id == KSet(7, {1}));
}

TEST_CASE("f_eval at the endpoints") {
    ProblemInstance inst(9, {4, 3, 2});
    Natural f1 = f_eval(inst, 1, FamilyID{KSet(9, {1}), 4}).f_value;
    CHECK(f1 == binomial(8, 3) + binomial(8, 2) + binomial(8, 1));  // 92
    CHECK(f1 == 92);
    Natural fm = f_eval(inst, 1, FamilyID{KSet(9, {2}), 4}).f_value;
    CHECK(fm == 99);
    FEvaluation ev = f_eval(inst, 1, FamilyID{KSet(9, {2}), 4});
    CHECK(ev.per_family_sizes[0] == 91);
    CHECK(ev.per_family_sizes[1] == 7);
    CHECK(ev.per_family_sizes[2] == 1);
}

TEST_CASE("alpha/beta increment identity and telescoping") {
    ProblemInstance inst(8, {3, 3});
    std::vector<KSet> padded = id_space_padded(inst, 1);
    for (std::size_t p = 0; p + 2 < padded.size(); p += 3) {
        FamilyID r{padded[p], 3}, h{padded[p + 1], 3}, g{padded[p + 2], 3};
        Natural lhs = f_eval(inst, 1, g).f_value - f_eval(inst, 1, r).f_value;
        CHECK(lhs == alpha(inst, 1, r, g) - beta(inst, 1, r, g));
        CHECK(alpha(inst, 1, r, g) ==
              alpha(inst, 1, r, h) + alpha(inst, 1, h, g));
        CHECK(beta(inst, 1, r, g) == beta(inst, 1, r, h) + beta(inst, 1, h, g));
    }
    FamilyID a{padded[3], 3}, b{padded[1], 3};
    CHECK_THROWS(alpha(inst, 1, a, b));  // reversed order
}

TEST_CASE("beta closed form example: consecutive pair with max G = 5") {
    // k_i = 3 with one 4-uniform partner family on [10].
    ProblemInstance inst(10, {4, 3});
    std::vector<KSet> padded = id_space_padded(inst, 2);
    bool found = false;
    for (std::size_t p = 0; p + 1 < padded.size(); ++p) {
        if (padded[p + 1].max() == 5) {
            Natural b =
                beta(inst, 2, FamilyID{padded[p], 3}, FamilyID{padded[p + 1], 3});
            CHECK(b == binomial(5, 2));  // 10
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("f_scan finds the bound at an endpoint") {
    ProblemInstance inst(9, {4, 3, 2});
    ScanReport scan = f_scan(inst, 1);
    CHECK(scan.max_value == 99);
    REQUIRE(scan.argmax.size() == 1);
    CHECK(scan.argmax.front().id == KSet(9, {2}));
    CHECK(scan.attained_at_m);
    CHECK(!scan.attained_at_one);

    ProblemInstance stars(20, {3, 3, 3});
    ScanReport s2 = f_scan(stars, 1);
    CHECK(s2.max_value == Natural(3) * binomial(19, 2));
    CHECK(s2.attained_at_one);
}

TEST_CASE("reference bounds") {
    ProblemInstance hm(4, {2, 2});
    bool saw_hm = false, saw_ft = false, saw_sfq = false, saw_bf = false;
    for (const NamedBound& nb : reference_bounds(hm)) {
        if (nb.name == "hilton-milner") {
            CHECK(nb.applicable);
            CHECK(nb.value == 6);
            saw_hm = true;
        }
        if (nb.name == "frankl-tokushige") {
            CHECK(nb.applicable);
            CHECK(nb.value == theorem_bound(hm).bound);
            saw_ft = true;
        }
        if (nb.name == "sfq-corollary") {
            CHECK(nb.applicable);
            CHECK(nb.value == theorem_bound(hm).bound);
            saw_sfq = true;
        }
        if (nb.name == "borg-feghali") {
            CHECK(nb.applicable);
            CHECK(nb.value >= theorem_bound(hm).bound);
            saw_bf = true;
        }
    }
    CHECK((saw_hm && saw_ft && saw_sfq && saw_bf));
    for (const NamedBound& nb : reference_bounds(ProblemInstance(9, {4, 3, 2})))
        CHECK(!nb.applicable);  // neither equal-k nor two families
}

TEST_CASE("extremal configs") {
    std::vector<ExtremalConfig> cfgs =
        extremal_configs(ProblemInstance(9, {4, 3, 2}));
    REQUIRE(cfgs.size() == 1);
    CHECK(cfgs[0].case_label == "star-T");
    CHECK(cfgs[0].sizes == std::vector<Natural>{91, 7, 1});
    CHECK(cfgs[0].total == 99);
    CHECK(cfgs[0].verified);
    CHECK(cfgs[0].verify_method == "enumeration");

    std::vector<ExtremalConfig> stars =
        extremal_configs(ProblemInstance(20, {3, 3, 3}));
    bool full = false;
    for (const ExtremalConfig& c : stars)
        if (c.case_label == "full-stars") {
            CHECK(c.total == Natural(3) * binomial(19, 2));
            CHECK(c.verified);
            full = true;
        }
    CHECK(full);

    std::vector<ExtremalConfig> deg = extremal_configs(ProblemInstance(4, {2, 2}));
    bool pair = false;
    for (const ExtremalConfig& c : deg)
        if (c.case_label == "complement-pair") {
            CHECK(c.sizes == std::vector<Natural>{1, 5});
            CHECK(c.verified);
            pair = true;
        }
    CHECK(pair);
}
