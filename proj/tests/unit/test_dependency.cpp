#include "support.hpp"

#include <doctest.h>
#include <fosm/dependency.hpp>
#include <fosm/formula_parser.hpp>
#include <fosm/verify.hpp>

using namespace fosm;

namespace {
Formula F(const char* text) { return parse_formula(text); }
Predicate P(const char* name) { return {name, 0}; }
} // namespace

TEST_CASE("dependency graph skips negated body atoms") {
    Formula f = fol_representation(parse_program(test::read_file("ladder.lp")));
    DependencyGraph g = dependency_graph(f, predicates_of(f));
    std::set<std::pair<Predicate, Predicate>> expected{{P("n"), P("t")}, {P("p"), P("q")}, {P("p"), P("t")},
                                                       {P("q"), P("r")}, {P("r"), P("m")}};
    CHECK(g.edges == expected);
    CHECK(g.vertices.size() == 7);
}

TEST_CASE("edges only between vertices") {
    DependencyGraph g = dependency_graph(F("(q -> p) & (p -> q) & (r -> s)"), {P("p"), P("q")});
    CHECK(g.edges == std::set<std::pair<Predicate, Predicate>>{{P("p"), P("q")}, {P("q"), P("p")}});
    auto sccs = strongly_connected_components(g);
    REQUIRE(sccs.size() == 1);
    CHECK(sccs[0] == PredicateList{P("p"), P("q")});
}

TEST_CASE("components match mutual reachability on random graphs") {
    Rng rng(9);
    for (int i = 0; i < 300; ++i) {
        DependencyGraph g;
        int n = 1 + rng.below(8);
        for (int v = 0; v < n; ++v)
            g.vertices.push_back({"v" + std::to_string(v), 0});
        int m = rng.below(2 * n + 1);
        for (int e = 0; e < m; ++e)
            g.edges.insert({rng.pick(g.vertices), rng.pick(g.vertices)});
        CHECK(strongly_connected_components(g) == oracle::components(g));
    }
}

TEST_CASE("dot output") {
    DependencyGraph g = dependency_graph(F("q -> p"), {P("p"), P("q")});
    CHECK(to_dot(g) == "digraph dependencies {\n  \"p\";\n  \"q\";\n  \"p\" -> \"q\";\n}\n");
}

TEST_CASE("split conditions") {
    Formula h = F("r -> p | q");
    SplitReport ok = check_split(F("s"), F("t"), h, {P("p"), P("s")}, {P("q"), P("t")});
    CHECK(ok.ok());

    SplitReport cyc = check_split(F("q -> p"), F("p -> q"), Formula::truth(), {P("p")}, {P("q")});
    CHECK_FALSE(cyc.components_ok);
    REQUIRE(cyc.bad_component);
    CHECK(*cyc.bad_component == PredicateList{P("p"), P("q")});

    SplitReport pos = check_split(F("p & q"), F("r"), Formula::truth(), {P("p")}, {P("q"), P("r")});
    CHECK_FALSE(pos.f_negative_on_q);
    CHECK(pos.f_witness == P("q"));
    CHECK(pos.describe().find("split does not apply") != std::string::npos);
}

TEST_CASE("split equivalence holds when the conditions do") {
    Formula h = F("r -> p | q");
    CHECK(verify_split_equivalence(F("s"), F("t"), h, {P("p"), P("s")}, {P("q"), P("t")}, 1));
    CHECK(verify_split_equivalence(F("~q -> p"), F("~p -> q"), Formula::truth(), {P("p")}, {P("q")}, 1));
    // Positive loop: the conditions fail and the equivalence does too.
    CHECK_FALSE(verify_split_equivalence(F("q -> p"), F("p -> q"), Formula::truth(), {P("p")}, {P("q")}, 1));
}

TEST_CASE("positive witness") {
    CHECK(positive_witness(F("~p & (q -> r)"), {P("p"), P("r")}) == P("r"));
    CHECK_FALSE(positive_witness(F("~p"), {P("p")}));
}
