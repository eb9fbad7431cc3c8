#include "support.hpp"

#include <doctest.h>
#include <fosm/error.hpp>
#include <fosm/formula_parser.hpp>
#include <fosm/herbrand.hpp>
#include <fosm/printer.hpp>
#include <fosm/verify.hpp>

using namespace fosm;

namespace {
Formula F(const char* text) { return parse_formula(text); }
} // namespace

TEST_CASE("answer set of a normal program") {
    Program p = parse_program(test::read_file("negation.lp"));
    auto sets = answer_sets(fol_representation(p));
    REQUIRE(sets.size() == 1);
    CHECK(to_string(sets[0]) == "{p(a), q(b), r(a)}");
}

TEST_CASE("SM agrees with the reduct oracle on random ground programs") {
    Rng rng(11);
    for (int i = 0; i < 300; ++i) {
        auto rules = random_ground_program(rng, 1 + rng.below(5), 1 + rng.below(7));
        Program p;
        p.rules = rules;
        CAPTURE(to_string(p));
        auto expected = oracle::answer_sets(rules);
        CHECK(test::names(answer_sets(fol_representation(rules))) == expected);
        CHECK(test::names(gl_answer_sets(rules)) == expected);
    }
}

TEST_CASE("SM agrees with the propositional reduct on random formulas") {
    Rng rng(5);
    FormulaShape shape;
    shape.predicates = {{"p", 0}, {"q", 0}, {"r", 0}, {"s", 0}};
    shape.quantifiers = false;
    shape.depth = 4;
    for (int i = 0; i < 400; ++i) {
        Formula f = random_formula(rng, shape);
        CAPTURE(to_string(f));
        std::vector<std::string> atoms;
        for (const auto& pr : predicates_of(f))
            atoms.push_back(pr.name);
        CHECK(test::names(answer_sets(f)) == oracle::stable_models(f, atoms));
    }
}

TEST_CASE("satisfies_sm over a fixed interpretation") {
    Signature sig = herbrand_signature(F("forall x (q(x) -> p(x)) & q(a)"));
    sig.objects.insert("b");
    auto with = [&](AtomSet atoms) { return PartialInterpretation::herbrand(sig, atoms); };
    Formula f = F("forall x (q(x) -> p(x)) & q(a)");
    PredicateList pq{{"p", 1}, {"q", 1}};
    CHECK(satisfies_sm(with({{"p", {"a"}}, {"q", {"a"}}}), f, pq));
    CHECK_FALSE(satisfies_sm(with({{"p", {"a"}}, {"q", {"a"}}, {"p", {"b"}}}), f, pq));
    // With p extensional any classical model is p-stable.
    CHECK(satisfies_sm(with({{"p", {"a"}}, {"q", {"a"}}, {"p", {"b"}}}), f, {{"q", 1}}));
}

TEST_CASE("stable models extend a fixed interpretation") {
    Formula f = F("forall x (q(x) -> p(x))");
    PartialInterpretation fixed({"a", "b"});
    fixed.set_object("a", 0);
    fixed.set_object("b", 1);
    fixed.cover({"q", 1});
    fixed.add({"q", {"b"}});
    auto models = stable_models(f, {{"p", 1}}, fixed);
    REQUIRE(models.size() == 1);
    CHECK(to_string(models[0].atoms({{"p", 1}})) == "{p(b)}");
}

TEST_CASE("herbrand models") {
    Signature sig;
    sig.predicates = {{"p", 0}, {"q", 0}};
    auto models = herbrand_models(F("p | q"), sig);
    CHECK(models.size() == 3);
}

TEST_CASE("engine guards") {
    CHECK_THROWS_AS((void)herbrand_signature(F("p(f(a))")), UnsupportedError);
    CHECK_THROWS_AS((void)herbrand_signature(F("forall x p(x)")), Error);
    EngineOptions tiny;
    tiny.max_candidates = 4;
    CHECK_THROWS_AS((void)answer_sets(F("a | b | c | d | e | f"), tiny), EnumerationLimitError);
    PartialInterpretation empty;
    CHECK_THROWS_AS((void)evaluate(empty, F("p")), UncoveredConstantError);
}

TEST_CASE("results do not depend on the worker count") {
    Rng rng(2);
    EngineOptions par;
    par.jobs = 4;
    for (int i = 0; i < 50; ++i) {
        auto rules = random_ground_program(rng, 6, 8);
        Formula f = fol_representation(rules);
        CHECK(answer_sets(f) == answer_sets(f, par));
    }
}

TEST_CASE("reduct oracle handles equality literals") {
    Program p = parse_program("p(a) :- a = a. q(a) :- a != a. r(b) :- not q(a).");
    CHECK(to_string(gl_answer_sets(p).at(0)) == "{p(a), r(b)}");
}
