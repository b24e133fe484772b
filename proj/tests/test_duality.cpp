#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "occlogic/duality.hpp"
#include "occlogic/relations.hpp"
#include "testutil.hpp"

using namespace occlogic;
using testutil::make_base;

namespace {
const char* kBaseA = "p & q\n!p & r\n!q | !r\n";
const char* kBaseB = "p\n!p\n!p | q\n";

using P = std::pair<int, int>;
}  // namespace

TEST_CASE("minimal hitting sets: fixed shapes") {
    // Two disjoint singletons force taking both elements.
    std::vector<PairList> coll = {{P{0, 1}}, {P{2, 3}}};
    CHECK(minimal_hitting_sets(coll) ==
          std::vector<PairList>{{P{0, 1}, P{2, 3}}});

    // One two-element set is hit by either element alone.
    coll = {{P{0, 1}, P{2, 3}}};
    CHECK(minimal_hitting_sets(coll) ==
          std::vector<PairList>{{P{0, 1}}, {P{2, 3}}});

    // Overlapping sets: the shared element is the unique smallest set.
    coll = {{P{0, 1}, P{0, 2}}, {P{0, 1}, P{1, 2}}};
    CHECK(minimal_hitting_sets(coll) ==
          std::vector<PairList>{{P{0, 1}}, {P{0, 2}, P{1, 2}}});
}

TEST_CASE("minimal hitting sets: conventions at the edges") {
    CHECK(minimal_hitting_sets({}) == std::vector<PairList>{{}});
    CHECK_THROWS_AS(minimal_hitting_sets({{P{0, 1}}, {}}),
                    std::invalid_argument);
    // Duplicate members change nothing.
    CHECK(minimal_hitting_sets({{P{0, 1}}, {P{0, 1}}}) ==
          std::vector<PairList>{{P{0, 1}}});
}

TEST_CASE("minimal hitting sets agree with subset enumeration") {
    std::mt19937 rng(4001);
    for (int t = 0; t < 200; ++t) {
        int universe = testutil::pick(rng, 1, 8);
        int members = testutil::pick(rng, 1, 6);
        std::vector<PairList> coll;
        for (int i = 0; i < members; ++i) {
            PairList s;
            for (int u = 0; u < universe; ++u)
                if (testutil::pick(rng, 0, 2) == 0) s.emplace_back(u, u + 10);
            if (s.empty()) s.emplace_back(testutil::pick(rng, 0, universe - 1),
                                          99);
            coll.push_back(s);
        }
        CHECK(minimal_hitting_sets(coll) ==
              testutil::ref_min_hitting_sets(coll));
    }
}

TEST_CASE("hitting-set maximality against one blocking set") {
    Base b = make_base(kBaseA);
    RelationSurvey s = survey_relations(b);
    REQUIRE(s.mcrs.size() == 2);
    const OccRelation& merge_q = s.mcrs[0];  // pairs {(1,4)}
    const OccRelation& merge_r = s.mcrs[1];  // pairs {(3,5)}

    PairList h1 = {{0, 2}, {1, 4}};  // blocks the p-merge and the q-merge
    PairList h2 = {{0, 2}, {3, 5}};
    CHECK(is_h_maximal(b, merge_r, h1));
    CHECK_FALSE(is_h_maximal(b, merge_q, h1));  // its own pair lies in h1
    CHECK(is_h_maximal(b, merge_q, h2));
    CHECK_FALSE(is_h_maximal(b, merge_r, h2));
    // The discrete relation avoids every set but can still grow freely.
    CHECK_FALSE(is_h_maximal(b, OccRelation::discrete(b), h2));
}

TEST_CASE("hitting-set minimality means being the closure of the set") {
    Base b = make_base(kBaseB);
    OccRelation pair01 = OccRelation::from_pairs(b, {{0, 1}});
    OccRelation all = OccRelation::from_pairs(b, {{0, 1}, {1, 2}});
    CHECK(is_h_minimal(b, pair01, {{0, 1}}));
    CHECK_FALSE(is_h_minimal(b, all, {{0, 1}}));       // closure is smaller
    CHECK(is_h_minimal(b, all, {{0, 1}, {1, 2}}));     // closure merges all
    CHECK_FALSE(is_h_minimal(b, pair01, {{1, 2}}));    // h not inside r
}

TEST_CASE("both correspondence directions hold on the worked examples") {
    for (const char* text : {kBaseA, kBaseB}) {
        Base b = make_base(text);
        DualityReport d = verify_duality(b);
        CHECK(d.mcr_direction_ok);
        CHECK(d.mir_direction_ok);
        CHECK(d.ok());
        CHECK(d.notes.empty());
    }
}

TEST_CASE("a merged-everything hitting set is not minimally inconsistent") {
    // With three slots of one variable, the complement sets {(0,1),(1,2)}
    // and {(0,1),(0,2)} admit the hitting set {(0,2),(1,2)} whose closure
    // merges all three slots. That closure strictly contains the closure of
    // {(0,1)}, so it must not be reported as minimal — only the filtered
    // correspondence matches the enumeration.
    Base b = make_base(kBaseB);
    std::vector<PairList> cmcrs = cmcr_sets(b);
    std::vector<PairList> hs = minimal_hitting_sets(cmcrs);
    bool has_wide = false;
    for (const PairList& h : hs)
        if (h == PairList{{0, 2}, {1, 2}}) has_wide = true;
    CHECK(has_wide);  // the troublesome hitting set really arises
    OccRelation closure = OccRelation::from_pairs(b, {{0, 2}, {1, 2}});
    CHECK_FALSE(is_mir(b, closure));
    CHECK(verify_duality(b).mir_direction_ok);
}

TEST_CASE("consistent bases: the empty hitting set selects the top") {
    Base b = make_base("p & q\nq -> r\n");
    DualityReport d = verify_duality(b);
    CHECK(d.ok());
    // The only relation with no room to grow is the one-block-per-variable
    // relation, which is exactly the unique maximal repair.
    CHECK(is_h_maximal(b, OccRelation::canonical(b), {}));
    CHECK_FALSE(is_h_maximal(b, OccRelation::discrete(b), {}));
}

TEST_CASE("duality verifies on random bases") {
    std::mt19937 rng(4002);
    for (int t = 0; t < 60; ++t) {
        Base b = testutil::random_base(rng);
        DualityReport d = verify_duality(b);
        if (!d.ok()) {
            for (const std::string& n : d.notes) MESSAGE(n);
        }
        CHECK(d.ok());
    }
}
