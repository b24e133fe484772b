#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "occlogic/common.hpp"
#include "occlogic/kernels.hpp"
#include "occlogic/semantics.hpp"
#include "testutil.hpp"

using namespace occlogic;
using testutil::F;

TEST_CASE("evaluate agrees with a plain truth-table walk") {
    std::mt19937 rng(2001);
    std::vector<std::string> vars = {"p", "q", "r", "s"};
    for (int t = 0; t < 1000; ++t) {
        FormulaPtr f = testutil::random_formula(rng, vars, 4);
        Valuation v = testutil::random_valuation(rng, vars);
        CHECK(evaluate(f, v) == testutil::tt_eval(f, v));
    }
}

TEST_CASE("satisfiability search agrees with truth tables") {
    std::mt19937 rng(2002);
    std::vector<std::string> vars = {"p", "q", "r", "s"};
    for (int t = 0; t < 300; ++t) {
        int n = testutil::pick(rng, 1, 4);
        std::vector<FormulaPtr> fs;
        for (int i = 0; i < n; ++i)
            fs.push_back(testutil::random_formula(rng, vars, 3));
        std::vector<EqConstraint> eqs;
        int ne = testutil::pick(rng, 0, 2);
        for (int i = 0; i < ne; ++i)
            eqs.push_back({vars[testutil::pick(rng, 0, 3)],
                           vars[testutil::pick(rng, 0, 3)]});
        CHECK(is_consistent(fs, eqs) == testutil::tt_consistent(fs, eqs));
    }
    CHECK(is_consistent({}));
    CHECK(is_consistent({F("p | !p")}));
    CHECK_FALSE(is_consistent({F("p"), F("!p")}));
    // Constraint chains over variables absent from the formulas.
    std::vector<EqConstraint> chain = {{"p", "q"}, {"q", "x"}, {"x", "y"}};
    CHECK(is_consistent({F("p | q")}, chain) ==
          testutil::tt_consistent({F("p | q")}, chain));
    CHECK_FALSE(is_consistent({F("p"), F("!q")}, {{"p", "q"}}));
}

TEST_CASE("entailment agrees with truth tables") {
    std::mt19937 rng(2003);
    std::vector<std::string> vars = {"p", "q", "r"};
    for (int t = 0; t < 300; ++t) {
        int n = testutil::pick(rng, 1, 3);
        std::vector<FormulaPtr> prem;
        for (int i = 0; i < n; ++i)
            prem.push_back(testutil::random_formula(rng, vars, 3));
        FormulaPtr goal = testutil::random_formula(rng, vars, 3);
        std::vector<EqConstraint> eqs;
        if (testutil::pick(rng, 0, 1))
            eqs.push_back({vars[testutil::pick(rng, 0, 2)],
                           vars[testutil::pick(rng, 0, 2)]});
        CHECK(entails(prem, eqs, goal) == testutil::tt_entails(prem, eqs, goal));
    }
    CHECK(entails({F("p & q")}, {}, F("p")));
    CHECK_FALSE(entails({F("p | q")}, {}, F("p")));
    CHECK(entails({F("p | q")}, {{"p", "q"}}, F("p")));
    CHECK(entails({}, {}, F("p | !p")));
    CHECK(entails({F("p"), F("!p")}, {}, F("q")));  // explosion is classical
}

TEST_CASE("model enumeration is exact and ordered") {
    std::vector<Valuation> ms =
        enumerate_models({F("p | q")}, {}, {"p", "q"});
    REQUIRE(ms.size() == 3);
    CHECK(ms[0] == Valuation{{"p", false}, {"q", true}});
    CHECK(ms[1] == Valuation{{"p", true}, {"q", false}});
    CHECK(ms[2] == Valuation{{"p", true}, {"q", true}});

    // Extra variables range freely and keep the lexicographic order.
    ms = enumerate_models({F("p & q")}, {}, {"p", "q", "r"});
    REQUIRE(ms.size() == 2);
    CHECK(ms[0] == Valuation{{"p", true}, {"q", true}, {"r", false}});
    CHECK(ms[1] == Valuation{{"p", true}, {"q", true}, {"r", true}});

    // Equality constraints cut the model set down.
    ms = enumerate_models({F("p | q")}, {{"p", "q"}}, {"p", "q"});
    REQUIRE(ms.size() == 1);
    CHECK(ms[0] == Valuation{{"p", true}, {"q", true}});

    // The empty formula list is a tautology.
    ms = enumerate_models({}, {}, {"p"});
    CHECK(ms.size() == 2);

    CHECK(enumerate_models({F("p & !p")}, {}, {"p"}).empty());
}

TEST_CASE("model enumeration rejects undeclared formula variables") {
    CHECK_THROWS_AS(enumerate_models({F("p & q")}, {}, {"p"}),
                    std::invalid_argument);
}

TEST_CASE("model enumeration enforces its variable cap") {
    std::set<std::string> many;
    for (char c = 'a'; c <= 'z'; ++c) many.insert(std::string(1, c));
    many.insert("aa");  // 27 variables
    CHECK_THROWS_AS(enumerate_models({}, {}, many), CapError);
    CHECK_THROWS_AS(enumerate_models({F("p")}, {}, {"p", "q", "r"}, 2),
                    CapError);
}

TEST_CASE("random spot checks of enumeration against the oracle") {
    std::mt19937 rng(2004);
    std::vector<std::string> vars = {"p", "q", "r"};
    std::set<std::string> dom(vars.begin(), vars.end());
    for (int t = 0; t < 100; ++t) {
        std::vector<FormulaPtr> fs = {testutil::random_formula(rng, vars, 3)};
        std::vector<Valuation> ms = enumerate_models(fs, {}, dom);
        std::size_t count = 0;
        testutil::tt_exists(vars, [&](const Valuation& v) {
            if (testutil::tt_eval(fs[0], v)) ++count;
            return false;
        });
        CHECK(ms.size() == count);
        for (const Valuation& v : ms) CHECK(testutil::tt_eval(fs[0], v));
    }
}

// ---------------------------------------------------------------------------
// Compiled kernels: the parallel bitmap scans must match the serial
// reference loops bit for bit.
// ---------------------------------------------------------------------------

namespace {

struct Compiled {
    EvalProgram prog;
    std::vector<int> leaf_to_var;
    std::vector<std::string> vars;
    FormulaPtr core;
};

Compiled compile_random(std::mt19937& rng, int max_vars, int depth) {
    std::vector<std::string> pool;
    for (int i = 0; i < max_vars; ++i) pool.push_back("v" + std::to_string(i));
    FormulaPtr core = desugar(testutil::random_formula(rng, pool, depth));
    Compiled c;
    c.core = core;
    c.prog = compile_core(core);
    std::set<std::string> seen = vars_of(core);
    c.vars.assign(seen.begin(), seen.end());
    for_each_occurrence(core, [&](const std::string& n, Polarity) {
        int id = static_cast<int>(
            std::find(c.vars.begin(), c.vars.end(), n) - c.vars.begin());
        c.leaf_to_var.push_back(id);
    });
    return c;
}

}  // namespace

TEST_CASE("assignment evaluation matches the tree walk") {
    std::mt19937 rng(2005);
    for (int t = 0; t < 200; ++t) {
        Compiled c = compile_random(rng, 5, 4);
        std::uint64_t a = rng() & ((1u << c.vars.size()) - 1);
        Valuation v;
        for (std::size_t i = 0; i < c.vars.size(); ++i)
            v[c.vars[i]] = (a >> i) & 1;
        CHECK(eval_assignment(c.prog, c.leaf_to_var, a) ==
              testutil::tt_eval(c.core, v));
    }
}

TEST_CASE("parallel model bitmaps equal the serial ones") {
    std::mt19937 rng(2006);
    for (int t = 0; t < 100; ++t) {
        Compiled c = compile_random(rng, 12, 5);
        int n = static_cast<int>(c.vars.size());
        auto serial = model_bitmap(c.prog, c.leaf_to_var, n, Exec::Serial);
        auto parallel = model_bitmap(c.prog, c.leaf_to_var, n, Exec::Parallel);
        CHECK(serial == parallel);
        CHECK(scan_satisfiable(c.prog, c.leaf_to_var, n, Exec::Serial) ==
              (popcount(serial) > 0));
        CHECK(scan_satisfiable(c.prog, c.leaf_to_var, n, Exec::Parallel) ==
              (popcount(serial) > 0));
    }
}

TEST_CASE("the empty conjunction compiles to the trivially true program") {
    EvalProgram p = compile_conjunction({});
    CHECK(p.trivially_true());
    auto bm = model_bitmap(p, {}, 3, Exec::Serial);
    CHECK(popcount(bm) == 8);
    CHECK(scan_satisfiable(p, {}, 0, Exec::Parallel));
}

TEST_CASE("sat_program answers satisfiability over merged leaves") {
    // p & !p as two leaves reading the same variable.
    EvalProgram prog = compile_core(desugar(F("a & !b")));
    CHECK(sat_program(prog, {0, 1}, 2));
    CHECK_FALSE(sat_program(prog, {0, 0}, 1));
}

TEST_CASE("three-valued assignment scans match the direct tables") {
    std::mt19937 rng(2007);
    for (int t = 0; t < 200; ++t) {
        Compiled c = compile_random(rng, 5, 4);
        int n = static_cast<int>(c.vars.size());
        std::uint64_t total = pow3(n);
        std::uint64_t a = rng() % total;
        testutil::LpmMap m;
        std::uint64_t rest = a;
        for (int i = 0; i < n; ++i) {
            int digit = static_cast<int>(rest % 3);
            rest /= 3;
            m[c.vars[i]] =
                digit == 0 ? kHas0 : digit == 1 ? kHas1 : (kHas0 | kHas1);
        }
        CHECK(lpm_eval_assignment(c.prog, c.leaf_to_var, n, a) ==
              testutil::ref_lpm_eval(c.core, m));
    }
}

TEST_CASE("three-valued bitmaps: serial equals parallel") {
    std::mt19937 rng(2008);
    for (int t = 0; t < 50; ++t) {
        Compiled c = compile_random(rng, 8, 4);
        int n = static_cast<int>(c.vars.size());
        auto serial = lpm_model_bitmap(c.prog, c.leaf_to_var, n, Exec::Serial);
        auto parallel =
            lpm_model_bitmap(c.prog, c.leaf_to_var, n, Exec::Parallel);
        CHECK(serial == parallel);
    }
    CHECK(pow3(0) == 1);
    CHECK(pow3(4) == 81);
}
