#include "support.hpp"

#include <doctest.h>
#include <fosm/formula_parser.hpp>
#include <fosm/incremental.hpp>
#include <fosm/verify.hpp>

using namespace fosm;

namespace {
Formula F(const char* text) { return parse_formula(text); }
Predicate P(const char* name) { return {name, 0}; }
const Formula bot = Formula::falsity();
const Formula top = Formula::truth();
} // namespace

TEST_CASE("simplification table") {
    Formula a = F("a");
    CHECK(simplify(Formula::negation(top)).is_falsity());
    CHECK(simplify(Formula::conj(bot, a)).is_falsity());
    CHECK(simplify(Formula::conj(a, bot)).is_falsity());
    CHECK(simplify(Formula::conj(top, a)) == a);
    CHECK(simplify(Formula::conj(a, top)) == a);
    CHECK(simplify(Formula::disj(bot, a)) == a);
    CHECK(simplify(Formula::disj(a, bot)) == a);
    CHECK(simplify(Formula::disj(top, a)).is_truth());
    CHECK(simplify(Formula::disj(a, top)).is_truth());
    CHECK(simplify(Formula::implies(bot, a)).is_truth());
    CHECK(simplify(Formula::implies(top, a)) == a);
    CHECK(simplify(Formula::forall("x", bot)).is_falsity());
    CHECK(simplify(Formula::exists("x", top)).is_truth());
    CHECK(simplify(Formula::negation(a)) == Formula::negation(a));
    CHECK(simplify(Formula::implies(a, top)) == Formula::implies(a, top));
}

TEST_CASE("projection of a first-order formula") {
    Formula f = parse_formula(test::read_file("projection.fo"));
    PredicateList keep{{"q", 1}, P("r"), {"s", 1}, {"t", 1}, P("m")};
    Formula expected = F("(q(a) -> r) & forall x (~q(x) & t(x) -> s(x))");
    CHECK(project_formula(f, keep) == expected);
    CHECK(project_formula(f, keep, RewriteStrategy::TopDown) == expected);
}

TEST_CASE("projection is idempotent and order independent") {
    Rng rng(21);
    FormulaShape shape;
    for (int i = 0; i < 300; ++i) {
        Formula f = random_formula(rng, shape);
        PredicateList keep;
        for (const auto& p : shape.predicates)
            if (rng.chance(0.5))
                keep.push_back(p);
        Formula once = project_formula(f, keep);
        CAPTURE(to_string(f));
        CHECK(project_formula(once, keep) == once);
        CHECK(project_formula(f, keep, RewriteStrategy::TopDown) == once);
    }
}

TEST_CASE("module instantiation trace") {
    FMResult r = fm_instantiate(parse_formula(test::read_file("chain.fo")), {P("t"), P("m")});
    CHECK(format_trace(r) == test::read_file("chain_trace.txt", FOSM_TEST_GOLDEN));
    REQUIRE(r.trace.size() == 5);
    CHECK(r.trace[3] == r.trace[4]);
}

TEST_CASE("FM and DM of a propositional program") {
    Program p = parse_program(test::read_file("ladder.lp"));
    FMResult fm = fm_instantiate(fol_representation(p), {P("l"), P("t")});
    CHECK(to_string(fm.module) == "(t → n, {l, t}, {m, n, p, q, r, s})");
    DLPModule dm = dm_instantiate(p, {{"l", {}}, {"t", {}}});
    CHECK(to_string(dm) == "({n :- t. p :- q, t.}, {l, t}, {n, p, q})");
}

TEST_CASE("program projection") {
    auto rules = parse_program("a :- b, not c. d :- not not c. e :- not f. g.").rules;
    AtomSet x{{"a", {}}, {"b", {}}, {"e", {}}, {"g", {}}};
    Program out;
    out.rules = project_program(rules, x);
    CHECK(to_string(out) == "a :- b.\ne.\ng.\n");
    CHECK(head_atoms(rules) == AtomSet{{"a", {}}, {"d", {}}, {"e", {}}, {"g", {}}});
    CHECK_THROWS_AS((void)project_program(parse_program("p(X) :- q(X).").rules, x), Error);
}

TEST_CASE("grounding order") {
    Program g = ground_program(parse_program("p(a). p(b). q(X,Y) :- p(X), p(Y), X != Y."));
    Program expected = parse_program(
        "p(a). p(b). q(a,a) :- p(a), p(a), a != a. q(a,b) :- p(a), p(b), a != b. "
        "q(b,a) :- p(b), p(a), b != a. q(b,b) :- p(b), p(b), b != b.");
    CHECK(to_string(g) == to_string(expected));
    CHECK(to_string(gl_answer_sets(g).at(0)) == "{p(a), p(b), q(a,b), q(b,a)}");
    CHECK_THROWS_AS((void)ground_program(parse_program("p :- 1{X : q(X)}.")), UnsupportedError);
}

TEST_CASE("incremental assembly of a counter") {
    auto t = IncrementalTheory::from_program(parse_program(test::read_file("counter.lp")));
    CHECK(acyclic_check(t, 3).ok());
    AssemblyState s = assemble(t, 2);
    CHECK(s.instantiated.size() == 4);
    CHECK(s.accumulated.size() == 3);
    CHECK(s.result.outputs == PredicateList{P("p_0"), P("p_1"), P("p_2")});
    auto models = incremental_solve(t, 2);
    REQUIRE(models.size() == 1);
    CHECK(to_string(models[0]) == "{p_0, p_1, p_2}");
    CHECK(test::names(answer_sets(k_expansion(t, 2))) == std::vector<oracle::Names>{{"p_0", "p_1", "p_2"}});
    CHECK_THROWS_AS((void)assemble(t, -1), StepError);
}

TEST_CASE("cyclic theory is rejected") {
    auto t = IncrementalTheory::from_program(parse_program(test::read_file("cyclic.lp")));
    AcyclicityReport r = acyclic_check(t, 1);
    REQUIRE_FALSE(r.ok());
    CHECK(r.violations[0].earlier == "B");
    CHECK(r.violations[0].later == "P[1]");
    CHECK(r.describe() == "P[1] is not negative on p_0 of B\nnot acyclic\n");
    CHECK_THROWS_AS((void)assemble(t, 1), NotAcyclicError);
}

TEST_CASE("solve in order rejects uncovered inputs") {
    FOModule m = FOModule::from_formula(F("q -> p"), {P("q")}, {P("p")});
    PartialInterpretation frame(std::vector<std::string>{});
    CHECK_THROWS_AS((void)solve_in_order({m}, frame), UncoveredConstantError);
}
