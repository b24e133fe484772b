#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "occlogic/analysis.hpp"
#include "occlogic/inference.hpp"
#include "occlogic/relations.hpp"
#include "occlogic/semantics.hpp"
#include "testutil.hpp"

using namespace occlogic;
using testutil::F;
using testutil::make_base;

namespace {
const char* kBaseB = "p\n!p\n!p | q\n";
}

TEST_CASE("renaming names blocks per variable in block order") {
    Base b = make_base(kBaseB);
    RelationSurvey s = survey_relations(b);
    REQUIRE(s.mcrs.size() == 2);

    ClassRenaming r1 = build_renaming(b, s.mcrs[0]);  // merge slots {0,2}
    CHECK(r1.slot_name ==
          std::vector<std::string>{"p__1", "p__2", "p__1", "q"});
    CHECK(r1.names_per_var.at("p") ==
          std::vector<std::string>{"p__1", "p__2"});
    CHECK(r1.names_per_var.at("q") == std::vector<std::string>{"q"});
    REQUIRE(r1.renamed.size() == 3);
    CHECK(structurally_equal(r1.renamed[0], F("p__1")));
    CHECK(structurally_equal(r1.renamed[1], desugar(F("!p__2"))));
    CHECK(structurally_equal(r1.renamed[2], desugar(F("!p__1 | q"))));

    ClassRenaming r2 = build_renaming(b, s.mcrs[1]);  // merge slots {1,2}
    CHECK(r2.slot_name ==
          std::vector<std::string>{"p__1", "p__2", "p__2", "q"});
}

TEST_CASE("a variable kept whole keeps its name") {
    Base b = make_base("p & q\nq -> p\n");
    ClassRenaming r = build_renaming(b, OccRelation::canonical(b));
    CHECK(r.slot_name == std::vector<std::string>{"p", "q", "q", "p"});
    for (int i = 0; i < b.size(); ++i)
        CHECK(structurally_equal(r.renamed[i], b.core_formulas()[i]));
}

TEST_CASE("renaming refuses relations that are not maximal repairs") {
    Base b = make_base(kBaseB);
    CHECK_THROWS_AS(build_renaming(b, OccRelation::discrete(b)),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_renaming(b, OccRelation::canonical(b)),
                    std::invalid_argument);
}

TEST_CASE("generated names step around collisions") {
    // The base already contains a variable spelled like a generated name, so
    // the separator grows until the names are fresh.
    Base b = make_base("p\n!p\np__1\n");
    RelationSurvey s = survey_relations(b);
    REQUIRE_FALSE(s.consistent);
    const OccRelation* split = nullptr;
    for (const OccRelation& m : s.mcrs)
        if (m == OccRelation::discrete(b)) split = &m;
    REQUIRE(split != nullptr);
    ClassRenaming r = build_renaming(b, *split);
    CHECK(r.names_per_var.at("p") ==
          std::vector<std::string>{"p___1", "p___2"});
    CHECK(r.names_per_var.at("p__1") == std::vector<std::string>{"p__1"});

    ClassRenaming r2 = build_renaming(b, *split, {"p___1"});
    CHECK(r2.names_per_var.at("p") ==
          std::vector<std::string>{"p____1", "p____2"});
}

TEST_CASE("existential tuple inference with witnesses") {
    Base b = make_base(kBaseB);
    std::vector<OccRelation> mcrs = enumerate_mcrs(b);

    std::vector<TupleWitness> ws;
    CHECK(infer_exists(b, mcrs, F("p"), &ws));
    REQUIRE(ws.size() == 2);
    CHECK(ws[0].relation_index == 0);
    CHECK(ws[0].shared_vars == std::vector<std::string>{"p"});
    CHECK(ws[0].tuple == std::vector<std::string>{"p__1"});
    CHECK(ws[1].relation_index == 1);
    CHECK(ws[1].tuple == std::vector<std::string>{"p__1"});

    // q fails under the first repair: neither p-block name proves q.
    std::vector<TupleWitness> none;
    CHECK_FALSE(infer_exists(b, mcrs, F("q"), &none));
    CHECK(none.empty());
}

TEST_CASE("universal tuple inference reports its first failure") {
    Base b = make_base(kBaseB);
    std::vector<OccRelation> mcrs = enumerate_mcrs(b);
    TupleWitness bad;
    CHECK_FALSE(infer_forall(b, mcrs, F("p"), &bad));
    CHECK(bad.relation_index == 0);
    CHECK(bad.tuple == std::vector<std::string>{"p__2"});
    CHECK(infer_forall(b, mcrs, F("p | !p"), nullptr));
}

TEST_CASE("verdict table for the three-formula conflict base") {
    Analyzer a(make_base(kBaseB));
    CHECK(a.entails(Relation::M1, F("p")));
    CHECK_FALSE(a.entails(Relation::M2, F("p")));
    CHECK(a.entails(Relation::Mb1, F("p")));
    CHECK_FALSE(a.entails(Relation::Mb2, F("p")));
    CHECK_FALSE(a.entails(Relation::M1, F("q")));
    CHECK_FALSE(a.entails(Relation::M2, F("q")));
    CHECK(a.entails(Relation::Mb1, F("q")));
    CHECK(a.entails(Relation::Mb2, F("q")));
}

TEST_CASE("consistent bases collapse to classical entailment") {
    std::mt19937 rng(5001);
    int done = 0;
    while (done < 60) {
        Base b = testutil::random_base(rng);
        if (!is_consistent(b.formulas())) continue;
        ++done;
        std::vector<std::string> vars(b.vars().begin(), b.vars().end());
        FormulaPtr q = testutil::random_formula(rng, vars, 2);
        bool classical = entails(b.core_formulas(), {}, desugar(q));
        Analyzer a(b);
        CHECK(a.entails(Relation::Classical, q) == classical);
        CHECK(a.entails(Relation::M1, q) == classical);
        CHECK(a.entails(Relation::M2, q) == classical);
        CHECK(a.entails(Relation::Mb1, q) == classical);
        CHECK(a.entails(Relation::Mb2, q) == classical);
    }
}

TEST_CASE("contradictory bases stay non-explosive") {
    Analyzer a(make_base("p\n!p\n"));
    CHECK_FALSE(a.entails(Relation::M1, F("p & !p")));
    CHECK_FALSE(a.entails(Relation::M1, F("q")));
    CHECK(a.entails(Relation::M1, F("p | !p")));
    CHECK(a.entails(Relation::Classical, F("q")));  // classical explosion
}

TEST_CASE("queries sharing no variable reduce to plain entailment") {
    Base b = make_base("p\n!p\nq\n");
    std::vector<OccRelation> mcrs = enumerate_mcrs(b);
    std::vector<TupleWitness> ws;
    CHECK(infer_exists(b, mcrs, F("q | r"), &ws));
    for (const TupleWitness& w : ws) {
        CHECK(w.shared_vars == std::vector<std::string>{"q"});
        CHECK(w.tuple == std::vector<std::string>{"q"});
    }
    CHECK_FALSE(infer_exists(b, mcrs, F("r"), nullptr));
    CHECK(infer_exists(b, mcrs, F("r | !r"), nullptr));
}

TEST_CASE("query variables never collide with generated block names") {
    // The query mentions p__1; the renaming must avoid capturing it.
    Base b = make_base("p\n!p\n");
    std::vector<OccRelation> mcrs = enumerate_mcrs(b);
    std::vector<TupleWitness> ws;
    bool yes = infer_exists(b, mcrs, F("p | p__1 | !p__1"), &ws);
    CHECK(yes);
    for (const TupleWitness& w : ws)
        for (const std::string& name : w.tuple) CHECK(name != "p__1");
    CHECK_FALSE(infer_exists(b, mcrs, F("p & p__1"), nullptr));
}

TEST_CASE("tuple order explores the rightmost shared variable fastest") {
    // Two split variables: the first failing tuple pins the iteration order.
    Base b = make_base("p & q\n!p & !q\n");
    std::vector<OccRelation> mcrs = enumerate_mcrs(b);
    REQUIRE(mcrs.size() == 1);  // only the all-split relation is consistent
    TupleWitness bad;
    CHECK_FALSE(infer_forall(b, mcrs, F("p & q"), &bad));
    CHECK(bad.shared_vars == std::vector<std::string>{"p", "q"});
    // (p__1, q__1) entails p&q; (p__1, q__2) does not — the second tuple in
    // rightmost-fastest order is the first failure.
    CHECK(bad.tuple == std::vector<std::string>{"p__1", "q__2"});
}
