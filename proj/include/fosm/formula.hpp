#pragma once
// First-order terms and formulas over a signature, plus the syntactic
// predicates (polarity, rules, heads, symbols) the stable model machinery
// is built from. All values are immutable and cheap to copy.

#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace fosm {

struct Predicate {
    std::string name;
    int arity = 0;

    friend auto operator<=>(const Predicate&, const Predicate&) = default;
    friend bool operator==(const Predicate&, const Predicate&) = default;
};

/// Ordered list of distinct predicate constants.
using PredicateList = std::vector<Predicate>;

[[nodiscard]] bool contains(const PredicateList& list, const Predicate& p);
/// Order-preserving union: members of `a`, then members of `b` not in `a`.
[[nodiscard]] PredicateList list_union(const PredicateList& a, const PredicateList& b);
[[nodiscard]] PredicateList list_difference(const PredicateList& a, const PredicateList& b);
[[nodiscard]] PredicateList list_intersection(const PredicateList& a, const PredicateList& b);
[[nodiscard]] bool same_members(const PredicateList& a, const PredicateList& b);
[[nodiscard]] PredicateList sorted(PredicateList list);

struct Signature {
    std::set<std::string> objects;
    std::map<std::string, int> functions; // name -> arity >= 1
    std::set<Predicate> predicates;

    /// Throws SignatureError if a name is used in two categories.
    void validate() const;
    Signature& merge(const Signature& other);
    [[nodiscard]] bool function_free() const noexcept { return functions.empty(); }
    [[nodiscard]] PredicateList predicate_list() const { return {predicates.begin(), predicates.end()}; }

    friend bool operator==(const Signature&, const Signature&) = default;
};

class Term {
public:
    enum class Kind : unsigned char { Variable, Constant, Function };

    static Term variable(std::string name);
    static Term constant(std::string name);
    static Term function(std::string name, std::vector<Term> args);

    [[nodiscard]] Kind kind() const noexcept;
    [[nodiscard]] const std::string& name() const noexcept;
    [[nodiscard]] const std::vector<Term>& args() const noexcept;
    [[nodiscard]] bool is_variable() const noexcept { return kind() == Kind::Variable; }
    [[nodiscard]] bool is_ground() const;

    /// Plain structural equality (no binders inside terms).
    friend bool operator==(const Term& a, const Term& b);
    friend std::strong_ordering operator<=>(const Term& a, const Term& b);

private:
    struct Node;
    explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// Step expression of an incrementally parameterized atom: `t`, `t+k`, `t-k` or `k`.
struct StepExpr {
    enum class Kind : unsigned char { Counter, Plus, Minus, Constant };
    Kind kind = Kind::Counter;
    int offset = 0;

    /// May be negative; callers decide whether that is an error.
    [[nodiscard]] long long evaluate(long long step) const noexcept;

    friend bool operator==(const StepExpr&, const StepExpr&) = default;
    friend auto operator<=>(const StepExpr&, const StepExpr&) = default;
};

class Formula {
public:
    enum class Kind : unsigned char { Atom, Equal, False, And, Or, Implies, Forall, Exists };

    static Formula atom(Predicate pred, std::vector<Term> args, std::optional<StepExpr> step = {});
    static Formula equal(Term lhs, Term rhs);
    static Formula falsity();
    /// ⊤ is the derived form ⊥ → ⊥.
    static Formula truth();
    static Formula conj(Formula a, Formula b);
    static Formula disj(Formula a, Formula b);
    static Formula implies(Formula a, Formula b);
    /// ¬F is F → ⊥.
    static Formula negation(Formula f);
    static Formula forall(std::string var, Formula body);
    static Formula exists(std::string var, Formula body);

    [[nodiscard]] Kind kind() const noexcept;

    // Atom
    [[nodiscard]] const Predicate& predicate() const;
    [[nodiscard]] const std::vector<Term>& args() const;
    [[nodiscard]] const std::optional<StepExpr>& step() const;
    // Equal
    [[nodiscard]] const Term& lhs_term() const;
    [[nodiscard]] const Term& rhs_term() const;
    // And / Or / Implies
    [[nodiscard]] const Formula& left() const;
    [[nodiscard]] const Formula& right() const;
    // Forall / Exists
    [[nodiscard]] const std::string& variable() const;
    [[nodiscard]] const Formula& body() const;

    [[nodiscard]] bool is_falsity() const noexcept { return kind() == Kind::False; }
    [[nodiscard]] bool is_truth() const noexcept;
    /// True for F → ⊥ (including ⊤ itself, which is ⊥ → ⊥).
    [[nodiscard]] bool is_negation() const noexcept;
    [[nodiscard]] bool is_binary() const noexcept;
    [[nodiscard]] bool is_quantifier() const noexcept;

    /// Same object in memory; a fast path for equality.
    [[nodiscard]] bool same_node(const Formula& other) const noexcept { return node_ == other.node_; }

    /// Structural equality up to renaming of bound variables.
    friend bool operator==(const Formula& a, const Formula& b);

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static Formula make(Node&& n);
    std::shared_ptr<const Node> node_;
};

/// Left-nested conjunction; the empty conjunction is ⊤.
[[nodiscard]] Formula conjoin(std::span<const Formula> parts);
/// Left-nested disjunction; the empty disjunction is ⊥.
[[nodiscard]] Formula disjoin(std::span<const Formula> parts);
/// Flattens nested ∧ into its conjunct list, left to right.
[[nodiscard]] std::vector<Formula> conjuncts(const Formula& f);

[[nodiscard]] std::set<std::string> free_variables(const Formula& f);
[[nodiscard]] std::set<std::string> term_variables(const Term& t);
/// All variable names occurring anywhere, free or bound.
[[nodiscard]] std::set<std::string> all_variables(const Formula& f);
/// ∀-closes free variables, lexicographically smallest outermost.
[[nodiscard]] Formula universal_closure(const Formula& f);
[[nodiscard]] bool is_sentence(const Formula& f);

/// `base` if unused, otherwise base1, base2, ... skipping names in `taken`.
[[nodiscard]] std::string fresh_name(const std::string& base, const std::set<std::string>& taken);

[[nodiscard]] Term substitute(const Term& t, const std::map<std::string, Term>& sub);
/// Capture-avoiding substitution for free occurrences of variables.
[[nodiscard]] Formula substitute(const Formula& f, const std::map<std::string, Term>& sub);

/// Replaces every atom with `fn(atom)` (structure otherwise preserved).
[[nodiscard]] Formula map_atoms(const Formula& f, const std::function<Formula(const Formula&)>& fn);

/// Visits every subformula occurrence with the number of implications
/// containing it in their antecedent.
void for_each_occurrence(const Formula& f, const std::function<void(const Formula&, int)>& visit);

[[nodiscard]] bool is_negative_on(const Formula& f, const PredicateList& preds);
/// Predicates with a strictly positive occurrence, sorted.
[[nodiscard]] PredicateList head_predicates(const Formula& f);
/// Implications at strictly positive positions, outermost first, left to right.
[[nodiscard]] std::vector<Formula> rules_of(const Formula& f);

/// Object, function and predicate constants occurring in `f`.
[[nodiscard]] Signature symbols_of(const Formula& f);
/// Predicate constants occurring in `f`, sorted.
[[nodiscard]] PredicateList predicates_of(const Formula& f);
[[nodiscard]] bool has_parameterized_atoms(const Formula& f);

} // namespace fosm
