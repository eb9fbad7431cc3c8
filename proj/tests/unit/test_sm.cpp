#include "support.hpp"

#include <doctest.h>
#include <fosm/error.hpp>
#include <fosm/formula_parser.hpp>
#include <fosm/sm.hpp>

using namespace fosm;

namespace {
Formula F(const char* text) { return parse_formula(text); }
const Predicate p0{"p", 0}, q0{"q", 0};
} // namespace

TEST_CASE("star transform") {
    PredicateList p{p0, q0}, u{{"u1", 0}, {"u2", 0}};
    CHECK(star_transform(F("p -> q"), p, u) == F("(u1 -> u2) & (p -> q)"));
    CHECK(star_transform(F("p | r"), p, u) == F("u1 | r"));
    CHECK(star_transform(F("forall x (s(x) & p)"), p, u) == F("forall x (s(x) & u1)"));
    CHECK(star_transform(F("~p"), p, u) == F("(u1 -> #false) & (p -> #false)"));
    CHECK_THROWS_AS((void)star_transform(F("p"), p, {{"u1", 0}}), ArityError);
    CHECK_THROWS_AS((void)star_transform(F("p"), p, {{"u1", 1}, {"u2", 0}}), ArityError);
}

TEST_CASE("u < p") {
    Formula f = u_less_than_p({p0, {"r", 1}}, {{"u1", 0}, {"u2", 1}});
    Formula expected = F("(u1 -> p) & forall x (u2(x) -> r(x)) & ~((p -> u1) & forall x (r(x) -> u2(x)))");
    CHECK(f == expected);
}

TEST_CASE("SM sentence") {
    SecondOrderSentence s = build_sm(F("(p -> q) & ~r"), {p0, q0});
    CHECK(s.variables == PredicateList{{"u1", 0}, {"u2", 0}});
    CHECK(to_string(s) == "(p → q) ∧ ¬r ∧ ¬∃u1 u2(((u1, u2) < (p, q)) ∧ (u1 → u2) ∧ (p → q) ∧ (¬r ∧ ¬r))");
    // Fresh names skip constants of F.
    CHECK(build_sm(F("u1 -> p"), {p0}).variables == PredicateList{{"u1'", 0}});
}

TEST_CASE("choice formula") {
    CHECK(choice_formula({}).is_truth());
    CHECK(choice_formula({{"r", 1}}) == F("forall x (r(x) | ~r(x))"));
}
