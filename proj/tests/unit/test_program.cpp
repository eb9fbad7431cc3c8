#include "support.hpp"

#include <doctest.h>
#include <fosm/error.hpp>
#include <fosm/formula_parser.hpp>
#include <fosm/herbrand.hpp>
#include <fosm/printer.hpp>
#include <fosm/verify.hpp>

using namespace fosm;

TEST_CASE("FOL-representation of a normal program") {
    Program p = parse_program(test::read_file("negation.lp"));
    CHECK(to_string(fol_representation(p)) == "p(a) ∧ q(b) ∧ ∀X(p(X) ∧ ¬q(X) → r(X))");
    CHECK(fol_representation(std::vector<Rule>{}).is_truth());
}

TEST_CASE("rule forms") {
    Program p = parse_program("{a} :- b. c ; not d :- not not e, not f. :- g. h.");
    REQUIRE(p.rules.size() == 4);
    CHECK(p.rules[0].choice);
    CHECK(p.rules[1].head[1].negated);
    CHECK(p.rules[1].body[0].kind == Literal::Kind::DoubleNegative);
    CHECK(p.rules[2].head.empty());
    CHECK(p.rules[3].is_fact());
    CHECK(rule_formula(p.rules[1]) == parse_formula("~~e & ~f -> c | ~d"));
    CHECK(rule_formula(p.rules[2]) == parse_formula("~g"));
}

TEST_CASE("choice rules desugar to excluded middle") {
    Program p = parse_program("{a(X)} :- b(X).");
    Rule d = desugar_choice(p.rules[0]);
    CHECK_FALSE(d.choice);
    REQUIRE(d.head.size() == 2);
    CHECK(d.head[1].negated);
    CHECK(rule_formula(p.rules[0]) == parse_formula("forall X (b(X) -> a(X) | ~a(X))"));
}

TEST_CASE("count aggregate expansion") {
    Formula e = expand_count(2, {"X"}, parse_formula("in_clique(X)"));
    CHECK(to_string(e) == "∃X1∃X2(in_clique(X1) ∧ in_clique(X2) ∧ ¬(X1 = X2))");
    CHECK_THROWS_AS((void)expand_count(0, {"X"}, parse_formula("p(X)")), Error);

    // Brute-force count over every extent of in_clique on three elements.
    Signature sig;
    sig.objects = {"a", "b", "c"};
    sig.predicates = {{"in_clique", 1}};
    for (unsigned mask = 0; mask < 8; ++mask) {
        AtomSet atoms;
        for (unsigned i = 0; i < 3; ++i)
            if (mask >> i & 1u)
                atoms.insert({"in_clique", {std::string(1, static_cast<char>('a' + i))}});
        auto i = PartialInterpretation::herbrand(sig, atoms);
        CHECK(evaluate(i, e) == (atoms.size() >= 2));
    }
}

TEST_CASE("canonical text parses back to the same program") {
    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        std::vector<Rule> rules = random_ground_program(rng, 5, 6);
        Program p;
        p.rules = rules;
        std::string text = to_string(p);
        CAPTURE(text);
        CHECK(to_string(parse_program(text)) == text);
    }
    for (const char* f : {"clique.lp", "graph.lp", "counter.lp", "ladder.lp"}) {
        std::string text = to_string(parse_program(test::read_file(f)));
        CHECK(to_string(parse_program(text)) == text);
    }
}

TEST_CASE("module declarations") {
    Program p = parse_program(test::read_file("clique.lp"));
    REQUIRE(p.inputs);
    REQUIRE(p.outputs);
    CHECK(*p.inputs == PredicateList{{"reachable", 1}, {"edge", 2}});
    CHECK(*p.outputs == PredicateList{{"in_clique", 1}});
}

TEST_CASE("program errors") {
    CHECK_THROWS_AS((void)parse_program("p(a). p(a,b)."), ArityError);
    try {
        (void)parse_program("p(a).\nq :- r,, s.");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 8);
    }
}

TEST_CASE("step instantiation") {
    Program p = parse_program(test::read_file("counter.lp"));
    CHECK(p.sectioned);
    CHECK(instantiated_name("p", 3) == "p_3");
    CHECK_THROWS_AS((void)instantiate_at(parse_formula("p@(t-1)"), 0), StepError);
    CHECK(instantiate_at(parse_formula("p@(t-1)"), 2) == parse_formula("p_1"));
}

TEST_CASE("program signature") {
    Signature s = program_signature(parse_program(test::read_file("negation.lp")));
    CHECK(s.objects == std::set<std::string>{"a", "b"});
    CHECK(s.predicates.size() == 3);
}
