#pragma once
// Logic programs: rules with disjunctive or choice heads, `not`, `not not`,
// (dis)equalities and count aggregates, plus their FOL-representation.

#include <fosm/formula.hpp>

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace fosm {

enum class Section { Base, Cumulative, Volatile };

struct Atom {
    Predicate predicate;
    std::vector<Term> args;
    std::optional<StepExpr> step;

    [[nodiscard]] Formula to_formula() const { return Formula::atom(predicate, args, step); }
    [[nodiscard]] bool is_ground() const;
};

struct Aggregate;

struct Literal {
    enum class Kind { Positive, Negative, DoubleNegative, Equal, NotEqual, Count };
    Kind kind = Kind::Positive;
    Atom atom;                                  // Positive, Negative, DoubleNegative
    std::optional<Term> lhs, rhs;               // Equal, NotEqual
    std::shared_ptr<const Aggregate> aggregate; // Count
    bool negated = false;                       // `not b{...}`

    static Literal positive(Atom a);
    static Literal negative(Atom a);
    static Literal double_negative(Atom a);
    static Literal equal(Term l, Term r);
    static Literal not_equal(Term l, Term r);
    static Literal count(int bound, std::vector<std::string> vars, std::vector<Literal> elements, bool negated);
};

/// `b{x : F(x)}`: at least `bound` distinct tuples over `variables`.
struct Aggregate {
    int bound = 1;
    std::vector<std::string> variables;
    std::vector<Literal> elements;
};

struct HeadElement {
    Atom atom;
    bool negated = false; // `not a` in a disjunctive head
};

struct Rule {
    std::vector<HeadElement> head; // empty for constraints
    bool choice = false;           // `{a} :- body.`; head has exactly one element
    std::vector<Literal> body;     // source order
    std::optional<Formula> formula; // `#formula F.` statement instead of a rule
    Section section = Section::Base;
    std::size_t line = 0;

    [[nodiscard]] bool is_fact() const { return !formula && !choice && head.size() == 1 && body.empty(); }
    [[nodiscard]] bool is_ground() const;
};

struct Program {
    std::vector<Rule> rules;
    std::optional<PredicateList> inputs;  // `#input`
    std::optional<PredicateList> outputs; // `#output`
    std::string counter = "t";
    bool sectioned = false; // any of #base / #cumulative / #volatile seen

    [[nodiscard]] bool is_ground() const;
    [[nodiscard]] std::vector<Rule> section(Section s) const;
};

/// Throws ParseError (with line:column), ArityError or SignatureError.
[[nodiscard]] Program parse_program(std::string_view text);

/// Universal closure of the implication a rule stands for.
[[nodiscard]] Formula rule_formula(const Rule& r);
/// Conjunction of rule formulas in order; the empty program is ⊤.
[[nodiscard]] Formula fol_representation(const std::vector<Rule>& rules);
[[nodiscard]] Formula fol_representation(const Program& p);

[[nodiscard]] Formula literal_formula(const Literal& l);
/// ∃x¹…x^b[⋀ F(xⁱ) ∧ ⋀_{i<j} ¬(xⁱ = xʲ)]; fresh names avoid `taken` and
/// every variable of `body`. Throws Error if b < 1 or `vars` is empty.
[[nodiscard]] Formula expand_count(int b, const std::vector<std::string>& vars, const Formula& body,
                                   const std::set<std::string>& taken = {});

/// `{p(x)} :- B.` becomes `p(x) ; not p(x) :- B.`; other rules are unchanged.
[[nodiscard]] Rule desugar_choice(const Rule& r);

/// Name of the plain predicate a parameterized atom becomes at step `v`.
[[nodiscard]] std::string instantiated_name(const std::string& base, long long v);
/// Replaces every parameterized atom with its indexed predicate; throws
/// StepError on a negative index.
[[nodiscard]] Formula instantiate_at(const Formula& f, long long step);
[[nodiscard]] Rule instantiate_at(const Rule& r, long long step);
[[nodiscard]] Program instantiate_at(const Program& p, long long step);

/// Constants of the program's FOL-representation.
[[nodiscard]] Signature program_signature(const Program& p);

[[nodiscard]] std::string to_string(const Atom& a);
[[nodiscard]] std::string to_string(const Literal& l);
[[nodiscard]] std::string to_string(const Rule& r);
/// Canonical program text; parses back to an equal program.
[[nodiscard]] std::string to_string(const Program& p);

} // namespace fosm
