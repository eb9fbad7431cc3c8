#include "support.hpp"

#include <doctest.h>
#include <fosm/formula_parser.hpp>
#include <fosm/modules.hpp>

using namespace fosm;

namespace {
Formula F(const char* text) { return parse_formula(text); }
Predicate P(const char* name) { return {name, 0}; }
FOModule M(const char* f, PredicateList in, PredicateList out) {
    return FOModule::from_formula(F(f), std::move(in), std::move(out));
}
DLPModule D(const char* file) {
    Program p = parse_program(test::read_file(file));
    DLPModule m;
    m.rules = p.rules;
    for (const auto& q : *p.inputs)
        m.inputs.insert({q.name, {}});
    for (const auto& q : *p.outputs)
        m.outputs.insert({q.name, {}});
    return m;
}
} // namespace

TEST_CASE("module validation") {
    CHECK_NOTHROW(M("p -> q", {P("p")}, {P("q")}).validate());
    CHECK_THROWS_AS(M("p -> q", {P("p")}, {P("p"), P("q")}).validate(), Error);
    CHECK_THROWS_AS(M("p -> q", {}, {P("q")}).validate(), Error);
    CHECK(to_string(M("p -> q", {P("p")}, {P("q")})) == "(p → q, {p}, {q})");
}

TEST_CASE("join of modules with a shared conjunct") {
    FOModule m1 = FOModule::from_formula(F("(r -> p | q) & s"), {P("q"), P("r")}, {P("p"), P("s")});
    FOModule m2 = FOModule::from_formula(F("(r -> p | q) & t"), {P("p"), P("r")}, {P("q"), P("t")});
    JoinReport r = joinable(m1, m2);
    CHECK(r.ok());
    REQUIRE(r.shared.size() == 1);
    CHECK(r.shared[0] == F("r -> p | q"));
    FOModule j = join(m1, m2);
    CHECK(to_string(j) == "(s ∧ t ∧ (r → p ∨ q), {r}, {p, s, q, t})");
}

TEST_CASE("not joinable") {
    FOModule m1 = M("q -> p", {P("q")}, {P("p")});
    FOModule m2 = M("~q -> p", {P("q")}, {P("p")});
    JoinReport r = joinable(m1, m2);
    CHECK_FALSE(r.outputs_disjoint);
    CHECK(r.common_outputs == PredicateList{P("p")});
    CHECK(r.describe().find("not joinable") != std::string::npos);
    CHECK_THROWS_AS((void)join(m1, m2), NotJoinableError);

    FOModule a = M("q -> p", {P("q")}, {P("p")});
    FOModule b = M("p -> q", {P("p")}, {P("q")});
    JoinReport loop = joinable(a, b);
    CHECK_FALSE(loop.components_ok);
    CHECK(loop.first_negative);
}

TEST_CASE("shared override must occur in both modules") {
    FOModule m1 = M("s", {}, {P("s")});
    FOModule m2 = M("t", {}, {P("t")});
    CHECK_THROWS_AS((void)joinable(m1, m2, std::vector<Formula>{F("s")}), Error);
    CHECK(joinable(m1, m2, std::vector<Formula>{}).ok());
}

TEST_CASE("module stable models over inputs") {
    Program reach = parse_program(test::read_file("reachable.lp"));
    FOModule m = module_from_program(reach);
    Program facts = parse_program(test::read_file("reach_input.lp"));
    Signature sig = program_signature(facts);
    sig.predicates.insert({"reachable", 1});
    PartialInterpretation in = PartialInterpretation::herbrand(sig, gl_answer_sets(facts).at(0));
    in = in.restrict(PredicateList{{"edge", 2}, {"at", 1}});
    auto models = module_stable_models(m, in);
    REQUIRE(models.size() == 1);
    CHECK(to_string(models[0].atoms({{"reachable", 1}})) == "{reachable(a), reachable(b), reachable(c)}");
}

TEST_CASE("module theorem on a concrete pair") {
    FOModule m1 = M("~q -> p", {P("q")}, {P("p")});
    FOModule m2 = M("r -> q", {P("r")}, {P("q")});
    for (unsigned mask = 0; mask < 8; ++mask) {
        PartialInterpretation i1(std::vector<std::string>{}), i2(std::vector<std::string>{});
        for (auto* i : {&i1, &i2})
            for (const char* n : {"p", "q", "r"})
                i->cover(P(n));
        const char* names[] = {"p", "q", "r"};
        for (unsigned b = 0; b < 3; ++b)
            if (mask >> b & 1u) {
                i1.add({names[b], {}});
                i2.add({names[b], {}});
            }
        CHECK(module_theorem_check(m1, m2, i1, i2));
    }
}

TEST_CASE("undeclared predicates become outputs") {
    std::vector<std::string> warnings;
    FOModule m = module_from_program(parse_program("#input q.\n#output p.\np :- q, r.\nr."), &warnings);
    CHECK(m.outputs == PredicateList{P("p"), P("r")});
    CHECK(warnings.size() == 1);
    warnings.clear();
    FOModule plain = module_from_program(parse_program("p :- q."), &warnings);
    CHECK(plain.inputs.empty());
    CHECK(warnings.empty());
}

TEST_CASE("DLP module answer sets") {
    DLPModule m1 = D("dlp1.lp");
    CHECK_NOTHROW(m1.validate());
    auto by_facts = dlp_answer_sets_by_facts(m1);
    CHECK(by_facts == dlp_answer_sets_by_choice(m1));
    // Inputs q, r: {s}, {q,s}, {p,r,s}, {q,r,s}.
    CHECK(test::names(by_facts) ==
          std::vector<oracle::Names>{{"p", "r", "s"}, {"q", "r", "s"}, {"q", "s"}, {"s"}});
}

TEST_CASE("DLP join agrees with the composed answer sets") {
    DLPModule m1 = D("dlp1.lp"), m2 = D("dlp2.lp");
    REQUIRE(dlp_joinable(m1, m2).ok());
    DLPModule j = dlp_join(m1, m2);
    CHECK(to_string(j) == "({p ; q :- r. s. t.}, {r}, {p, q, s, t})");

    auto a1 = dlp_module_answer_sets(m1), a2 = dlp_module_answer_sets(m2);
    std::vector<oracle::Names> composed;
    for (const auto& x1 : a1)
        for (const auto& x2 : a2) {
            AtomSet shared1, shared2;
            for (const auto& a : x1)
                if (m2.inputs.count(a) || m2.outputs.count(a))
                    shared1.insert(a);
            for (const auto& a : x2)
                if (m1.inputs.count(a) || m1.outputs.count(a))
                    shared2.insert(a);
            if (shared1 == shared2) {
                AtomSet u = x1;
                u.insert(x2.begin(), x2.end());
                composed.push_back(test::names(u));
            }
        }
    std::sort(composed.begin(), composed.end());
    CHECK(test::names(dlp_module_answer_sets(j)) == composed);
}

TEST_CASE("DLP join rejects shared outputs") {
    DLPModule m1 = D("overlap1.lp"), m2 = D("overlap2.lp");
    DLPJoinReport r = dlp_joinable(m1, m2);
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.outputs_disjoint);
    CHECK_THROWS_AS((void)dlp_join(m1, m2), Error);
}

TEST_CASE("opaque translation preserves answer sets") {
    DLPModule m = D("dlp1.lp");
    FOModule fo = dlp_to_fo(m);
    CHECK(fo.inputs == PredicateList{P("q"), P("r")});
    CHECK(opaque_predicate({"edge", {"a", "b"}}) == Predicate{"edge(a,b)", 0});
    CHECK(to_string(to_atom({"edge", {"a", "b"}})) == "edge(a,b)");

    PartialInterpretation frame(std::vector<std::string>{});
    std::vector<oracle::Names> fo_sets;
    for (unsigned mask = 0; mask < 4; ++mask) {
        PartialInterpretation in = frame;
        in.cover(P("q"));
        in.cover(P("r"));
        if (mask & 1u)
            in.add({"q", {}});
        if (mask & 2u)
            in.add({"r", {}});
        for (const auto& model : module_stable_models(fo, in))
            fo_sets.push_back(test::names(model.atoms()));
    }
    std::sort(fo_sets.begin(), fo_sets.end());
    CHECK(fo_sets == test::names(dlp_module_answer_sets(m)));
}
