#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "occlogic/analysis.hpp"
#include "occlogic/osem.hpp"
#include "occlogic/relations.hpp"
#include "testutil.hpp"

using namespace occlogic;
using testutil::F;
using testutil::make_base;

namespace {

const char* kBaseB = "p\n!p\n!p | q\n";
// The separation base: a direct conflict on p next to an untouched clause.
const char* kBaseSep = "p\n!p\nq | r\n";

OInterpretation mu(std::vector<int> values) {
    OInterpretation m;
    m.values.assign(values.begin(), values.end());
    return m;
}

// Reference minimality filters working directly off the full o-model list.
std::vector<OInterpretation> brute_o_models(const Base& b) {
    std::vector<OInterpretation> out;
    int n = b.occurrence_count();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        OInterpretation v;
        for (int k = 0; k < n; ++k)
            v.values.push_back(static_cast<std::uint8_t>((m >> k) & 1));
        if (is_o_model(b, v)) out.push_back(std::move(v));
    }
    return out;
}

std::vector<OInterpretation> brute_a_minimal(const Base& b) {
    std::vector<OInterpretation> models = brute_o_models(b);
    std::vector<OInterpretation> out;
    for (const OInterpretation& m : models) {
        PairList da = diff_a(b, m);
        bool minimal = true;
        for (const OInterpretation& o : models) {
            PairList ob = diff_a(b, o);
            if (ob != da && testutil::pair_subset(ob, da)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<OInterpretation> brute_b_minimal(const Base& b) {
    std::vector<OInterpretation> models = brute_o_models(b);
    std::vector<OInterpretation> out;
    for (const OInterpretation& m : brute_a_minimal(b)) {
        PairList db = diff_b(b, m);
        bool minimal = true;
        for (const OInterpretation& o : models) {
            PairList ob = diff_b(b, o);
            if (ob != db && testutil::pair_subset(ob, db)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(m);
    }
    return out;
}

}  // namespace

TEST_CASE("o-models value occurrences independently") {
    Base b = make_base(kBaseB);
    CHECK(is_o_model(b, mu({1, 0, 0, 0})));
    CHECK(is_o_model(b, mu({1, 0, 1, 1})));
    CHECK_FALSE(is_o_model(b, mu({0, 0, 0, 0})));   // first formula fails
    CHECK_FALSE(is_o_model(b, mu({1, 1, 0, 0})));   // second formula fails
    CHECK_FALSE(is_o_model(b, mu({1, 0, 1, 0})));   // third formula fails
    CHECK_THROWS_AS(is_o_model(b, mu({1, 0})), std::invalid_argument);
}

TEST_CASE("difference sets respect variables and polarities") {
    Base b = make_base(kBaseB);  // slots: p+ p- p- q+
    OInterpretation m = mu({1, 0, 0, 0});
    CHECK(diff_a(b, m) == PairList{{0, 1}, {0, 2}});
    CHECK(diff_b(b, m) == PairList{{0, 1}, {0, 2}});  // both pairs are +/-
    m = mu({1, 0, 1, 0});
    CHECK(diff_a(b, m) == PairList{{0, 1}, {1, 2}});
    CHECK(diff_b(b, m) == PairList{{0, 1}});  // slots 1 and 2 share polarity
    m = mu({1, 1, 1, 0});
    CHECK(diff_a(b, m).empty());
    CHECK(diff_b(b, m).empty());
}

TEST_CASE("the separation base has exactly three a-minimal o-models") {
    Base b = make_base(kBaseSep);  // slots: p+ p- q+ r+
    std::vector<OInterpretation> ms = a_minimal_o_models(b);
    REQUIRE(ms.size() == 3);
    CHECK(ms[0] == mu({1, 0, 0, 1}));
    CHECK(ms[1] == mu({1, 0, 1, 0}));
    CHECK(ms[2] == mu({1, 0, 1, 1}));
    for (const OInterpretation& m : ms)
        CHECK(diff_a(b, m) == PairList{{0, 1}});
}

TEST_CASE("consistent bases have agreeing-value minimal o-models") {
    Base b = make_base("p & q\nq -> r\n");
    for (const OInterpretation& m : a_minimal_o_models(b)) {
        CHECK(diff_a(b, m).empty());
        CHECK(is_o_model(b, m));
    }
    CHECK(a_minimal_o_models(b).size() == 1);  // q slots tied, p=q=r=1 forced
}

TEST_CASE("antichain-based minimality matches the global filters") {
    std::mt19937 rng(6001);
    for (int t = 0; t < 50; ++t) {
        Base b = testutil::random_base(rng);
        std::vector<OInterpretation> a_lib = a_minimal_o_models(b);
        CHECK(a_lib == brute_a_minimal(b));
        std::vector<OInterpretation> b_lib = b_minimal_o_models(b);
        CHECK(b_lib == brute_b_minimal(b));
        // Serial and parallel scans agree.
        CHECK(a_lib == a_minimal_o_models(b, Caps{}, Exec::Serial));
        CHECK(b_lib == b_minimal_o_models(b, Caps{}, Exec::Serial));
        // Every b-minimal model is a-minimal.
        for (const OInterpretation& m : b_lib)
            CHECK(std::find(a_lib.begin(), a_lib.end(), m) != a_lib.end());
    }
}

TEST_CASE("the occurrence scan honours its cap") {
    Base b = make_base(kBaseB);
    Caps tight;
    tight.occurrences = 3;
    CHECK_THROWS_AS(a_minimal_o_models(b, tight), CapError);
    CHECK_THROWS_AS(b_minimal_o_models(b, tight), CapError);
}

TEST_CASE("compatible valuations match some occurrence per variable") {
    Base b = make_base(kBaseB);
    OInterpretation m = mu({1, 0, 0, 0});
    // p occurrences carry both values, q only 0.
    std::vector<Valuation> vs = compatible_valuations(b, m);
    REQUIRE(vs.size() == 2);
    CHECK(vs[0] == Valuation{{"p", false}, {"q", false}});
    CHECK(vs[1] == Valuation{{"p", true}, {"q", false}});

    // Extra variables range freely, ordered value 0 before 1.
    vs = compatible_valuations(b, m, {"z"});
    REQUIRE(vs.size() == 4);
    CHECK(vs[0] == Valuation{{"p", false}, {"q", false}, {"z", false}});
    CHECK(vs[3] == Valuation{{"p", true}, {"q", false}, {"z", true}});

    OInterpretation uniform = mu({1, 0, 0, 1});
    vs = compatible_valuations(b, uniform);
    REQUIRE(vs.size() == 2);
    CHECK(vs[1] == Valuation{{"p", true}, {"q", true}});
}

TEST_CASE("o-models of a repair are read off its constrained models") {
    Base b = make_base(kBaseB);
    std::vector<OccRelation> mcrs = enumerate_mcrs(b);
    REQUIRE(mcrs.size() == 2);
    // Equating slots 0 and 2 forces p1=1, p2=0, p3=1 and then q=1.
    std::vector<OInterpretation> om = om_of(b, mcrs[0]);
    REQUIRE(om.size() == 1);
    CHECK(om[0] == mu({1, 0, 1, 1}));
    // Equating slots 1 and 2 leaves q free.
    om = om_of(b, mcrs[1]);
    REQUIRE(om.size() == 2);
    CHECK(om[0] == mu({1, 0, 0, 0}));
    CHECK(om[1] == mu({1, 0, 0, 1}));
}

TEST_CASE("a-entailment separates from tuple entailment") {
    Base b = make_base(kBaseSep);
    FormulaPtr phi = F("(!p & (!q | !r)) | (p & q & r)");
    CHECK(infer_a1(b, phi));
    Analyzer a(b);
    CHECK_FALSE(a.entails(Relation::M1, phi));
    CHECK(a.entails(Relation::A1, phi));
}

TEST_CASE("universal o-semantics verdicts match the tuple semantics") {
    // The a2/b2 readings coincide with the universal tuple relations.
    std::mt19937 rng(6002);
    std::vector<std::string> pool = {"p", "q", "r", "s"};
    for (int t = 0; t < 40; ++t) {
        Base b = testutil::random_base(rng);
        std::vector<std::string> vars(b.vars().begin(), b.vars().end());
        vars.push_back("z");  // occasionally query a fresh variable
        FormulaPtr q = testutil::random_formula(rng, vars, 2);
        Analyzer a(b);
        CHECK(a.entails(Relation::A2, q) == a.entails(Relation::M2, q));
        CHECK(a.entails(Relation::B2, q) == a.entails(Relation::Mb2, q));
    }
}

TEST_CASE("failed universal checks surface a counterexample") {
    Base b = make_base(kBaseB);
    OSemCounterexample ce;
    CHECK_FALSE(infer_a2(b, F("p"), Caps{}, Exec::Parallel, &ce));
    CHECK(is_o_model(b, ce.mu));
    CHECK_FALSE(evaluate(F("p"), ce.omega));
    bool found = false;
    for (const Valuation& v : compatible_valuations(b, ce.mu))
        if (v == ce.omega) found = true;
    CHECK(found);

    OSemCounterexample ce2;
    CHECK_FALSE(infer_b2(b, F("!q"), Caps{}, Exec::Parallel, &ce2));
    CHECK(evaluate(F("q"), ce2.omega));
}

TEST_CASE("b-minimal entailment on the direct conflict") {
    Base b = make_base("p\n!p\n");
    // The only o-model values the two slots 1 and 0, so both p-valuations
    // are compatible: each of p and !p has a witnessing valuation, but no
    // single valuation satisfies their conjunction.
    CHECK(infer_b1(b, F("p")));
    CHECK(infer_b1(b, F("!p")));
    CHECK_FALSE(infer_b1(b, F("p & !p")));
    CHECK_FALSE(infer_a1(b, F("p & !p")));
    CHECK(infer_b1(b, F("p | !p")));
    CHECK(infer_a1(b, F("p | !p")));
}
