#include "support.hpp"

#include <doctest.h>
#include <fosm/error.hpp>
#include <fosm/formula_parser.hpp>
#include <fosm/printer.hpp>
#include <fosm/verify.hpp>

using namespace fosm;

namespace {
Formula F(const char* text) { return parse_formula(text); }
const Predicate p0{"p", 0}, q0{"q", 0}, r0{"r", 0};
} // namespace

TEST_CASE("printing round-trips through the parser") {
    Rng rng(7);
    FormulaShape shape;
    for (int i = 0; i < 500; ++i) {
        Formula f = random_formula(rng, shape);
        CAPTURE(to_string(f));
        CHECK(parse_formula(to_string(f)) == f);
        CHECK(parse_formula(to_string(f, {true})) == f);
    }
}

TEST_CASE("printer uses derived connectives and minimal parentheses") {
    CHECK(to_string(Formula::truth()) == "⊤");
    CHECK(to_string(Formula::negation(F("p"))) == "¬p");
    CHECK(to_string(F("(p -> q) -> r")) == "(p → q) → r");
    CHECK(to_string(F("p -> q -> r")) == "p → (q → r)");
    CHECK(to_string(Formula::conj(F("p"), F("q & r"))) == "p ∧ (q ∧ r)");
    CHECK(to_string(F("p & (q | r)")) == "p ∧ (q ∨ r)");
    CHECK(to_string(F("forall x (p(x) -> exists y t(x,y))"), {true}) == "forall x(p(x) -> exists y t(x,y))");
}

TEST_CASE("biconditional expands to both implications") {
    CHECK(F("p <-> q") == F("(p -> q) & (q -> p)"));
    CHECK(F("p ↔ q") == F("p <-> q"));
}

TEST_CASE("equality is up to renaming of bound variables") {
    CHECK(F("forall x p(x)") == F("forall y p(y)"));
    CHECK(F("forall x exists y t(x,y)") == F("forall y exists x t(y,x)"));
    CHECK_FALSE(F("forall x exists y t(x,y)") == F("forall x exists y t(y,x)"));
    CHECK_FALSE(F("p") == F("q"));
}

TEST_CASE("substitution avoids capture") {
    Formula f = substitute(F("forall y t(x,y)"), {{"x", Term::variable("y")}});
    CHECK(to_string(f) == "∀y1 t(y,y1)");
    CHECK(free_variables(f) == std::set<std::string>{"y"});
}

TEST_CASE("universal closure puts the smallest variable outermost") {
    CHECK(to_string(universal_closure(F("t(y,x)"))) == "∀x∀y t(y,x)");
    CHECK(is_sentence(universal_closure(F("t(y,x)"))));
}

TEST_CASE("empty conjunction and disjunction") {
    CHECK(conjoin(std::vector<Formula>{}).is_truth());
    CHECK(disjoin(std::vector<Formula>{}).is_falsity());
    CHECK(conjuncts(F("p & (q & r)")).size() == 3);
}

TEST_CASE("polarity") {
    CHECK(is_negative_on(F("~p"), {p0}));
    CHECK(is_negative_on(F("p -> q"), {p0}));
    CHECK_FALSE(is_negative_on(F("p -> q"), {q0}));
    CHECK(is_negative_on(F("(p -> q) -> r"), {p0}));
    CHECK_FALSE(is_negative_on(F("r -> (q -> p)"), {p0}));
    CHECK(is_negative_on(F("q & ~~p"), {p0}));
    CHECK(head_predicates(F("(q -> p | r) & ~s")) == PredicateList{p0, r0});
}

TEST_CASE("rules are implications at strictly positive positions") {
    auto rs = rules_of(F("(p -> q) & forall x (r(x) -> (s -> t(x,x)))"));
    REQUIRE(rs.size() == 3);
    CHECK(rs[0] == F("p -> q"));
    CHECK(to_string(rs[2]) == "s → t(x,x)");
}

TEST_CASE("symbols") {
    Signature s = symbols_of(F("forall x (p(x) -> q(a)) & r"));
    CHECK(s.objects == std::set<std::string>{"a"});
    CHECK(predicates_of(F("forall x (p(x) -> q(a)) & r")) == PredicateList{{"p", 1}, {"q", 1}, r0});
}

TEST_CASE("list operations keep order") {
    PredicateList a{r0, p0}, b{q0, p0};
    CHECK(list_union(a, b) == PredicateList{r0, p0, q0});
    CHECK(list_difference(a, b) == PredicateList{r0});
    CHECK(list_intersection(a, b) == PredicateList{p0});
    CHECK(same_members(a, PredicateList{p0, r0}));
}

TEST_CASE("formula parse errors carry a position") {
    CHECK_THROWS_AS((void)F("p & "), ParseError);
    try {
        (void)F("p &\n  & q");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}
