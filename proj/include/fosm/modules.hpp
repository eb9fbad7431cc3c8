#pragma once
// First-order modules (F, I, O), their join, and DLP-modules over ground
// atoms as the propositional special case.

#include <fosm/dependency.hpp>
#include <fosm/error.hpp>
#include <fosm/herbrand.hpp>
#include <fosm/printer.hpp>
#include <fosm/program.hpp>

#include <optional>
#include <string>
#include <vector>

namespace fosm {

struct FOModule {
    std::vector<Formula> conjuncts; // F is their conjunction (⊤ when empty)
    PredicateList inputs;
    PredicateList outputs;

    [[nodiscard]] Formula formula() const { return conjoin(conjuncts); }
    /// Throws Error unless I ∩ O = ∅ and pr(F) ⊆ I ∪ O.
    void validate() const;

    static FOModule from_formula(const Formula& f, PredicateList inputs, PredicateList outputs);
};

/// `(F, {I}, {O})`.
[[nodiscard]] std::string to_string(const FOModule& m, const PrintOptions& opts = {});

struct JoinReport {
    std::vector<Formula> shared; // H
    std::vector<Formula> rest1;  // F1'
    std::vector<Formula> rest2;  // F2'
    bool outputs_disjoint = true;
    bool components_ok = true;
    bool first_negative = true;  // F1' negative on O2
    bool second_negative = true; // F2' negative on O1
    PredicateList common_outputs;
    std::optional<PredicateList> bad_component;
    std::optional<Predicate> first_witness;
    std::optional<Predicate> second_witness;

    [[nodiscard]] bool ok() const { return outputs_disjoint && components_ok && first_negative && second_negative; }
    [[nodiscard]] std::string describe() const;
};

/// Splits each module into F' ∧ H, where H is the largest multiset of
/// conjuncts (up to bound-variable renaming) occurring in both, matched in
/// the first module's order; `shared` overrides that choice and must occur
/// in both modules.
[[nodiscard]] JoinReport joinable(const FOModule& m1, const FOModule& m2,
                                  const std::optional<std::vector<Formula>>& shared = std::nullopt);

class NotJoinableError : public Error {
public:
    explicit NotJoinableError(JoinReport report);
    [[nodiscard]] const JoinReport& report() const noexcept { return report_; }

private:
    JoinReport report_;
};

/// (F1' ∧ F2' ∧ H, (I1 ∪ I2) \ (O1 ∪ O2), O1 ∪ O2); throws NotJoinableError.
[[nodiscard]] FOModule join(const FOModule& m1, const FOModule& m2,
                            const std::optional<std::vector<Formula>>& shared = std::nullopt);

/// I ⊨ SM[F; O] for every extension of `inputs` by output extents. Inputs
/// occurring in F (and F's object constants) must be covered.
[[nodiscard]] std::vector<PartialInterpretation> module_stable_models(const FOModule& m,
                                                                      const PartialInterpretation& inputs,
                                                                      const EngineOptions& opts = {});

/// Both sides of the module theorem for compatible I1, I2; true when they
/// agree. Throws IncompatibleError or UncoveredConstantError on violated
/// preconditions, NotJoinableError if the modules cannot be joined.
[[nodiscard]] bool module_theorem_check(const FOModule& m1, const FOModule& m2, const PartialInterpretation& i1,
                                        const PartialInterpretation& i2, const EngineOptions& opts = {});

/// Module for a parsed program: declared `#input`/`#output` lists, with
/// every other predicate of the program added to the outputs. Each such
/// predicate is reported in `warnings` when the file declares outputs.
[[nodiscard]] FOModule module_from_program(const Program& p, std::vector<std::string>* warnings = nullptr);

// ---------------------------------------------------------------------------
// DLP-modules
// ---------------------------------------------------------------------------

struct DLPModule {
    std::vector<Rule> rules; // ground
    AtomSet inputs;
    AtomSet outputs;

    /// Throws Error on non-ground rules, aggregates, I ∩ O ≠ ∅, atoms
    /// outside I ∪ O, or a rule with a nonempty head disjoint from O.
    void validate() const;
};

[[nodiscard]] std::string to_string(const DLPModule& m);

/// Module answer sets as answer sets of Π ∪ {p. | p ∈ I ∩ X}.
[[nodiscard]] std::vector<AtomSet> dlp_answer_sets_by_facts(const DLPModule& m, const EngineOptions& opts = {});
/// Module answer sets as answer sets of Π ∪ {{p}. | p ∈ I}.
[[nodiscard]] std::vector<AtomSet> dlp_answer_sets_by_choice(const DLPModule& m, const EngineOptions& opts = {});
/// The choice characterization, cross-checked against the facts one
/// (InternalError if they differ).
[[nodiscard]] std::vector<AtomSet> dlp_module_answer_sets(const DLPModule& m, const EngineOptions& opts = {});

/// Vertices O, edges from every head atom to every positive body atom.
[[nodiscard]] DependencyGraph dlp_dependency_graph(const std::vector<Rule>& rules, const AtomSet& outputs);

struct DLPJoinReport {
    bool outputs_disjoint = true;
    bool components_ok = true;
    bool rules_shared = true;
    std::optional<std::string> witness;

    [[nodiscard]] bool ok() const { return outputs_disjoint && components_ok && rules_shared; }
    [[nodiscard]] std::string describe() const;
};

[[nodiscard]] DLPJoinReport dlp_joinable(const DLPModule& m1, const DLPModule& m2);
/// (Π1 ∪ Π2, (I1 ∪ I2) \ (O1 ∪ O2), O1 ∪ O2); throws Error if not joinable.
[[nodiscard]] DLPModule dlp_join(const DLPModule& m1, const DLPModule& m2);

/// Ground atoms become 0-ary predicates named by their text, e.g. `edge(a,b)`.
[[nodiscard]] Predicate opaque_predicate(const GroundAtom& a);
[[nodiscard]] AtomSet opaque(const AtomSet& atoms);
[[nodiscard]] FOModule dlp_to_fo(const DLPModule& m);

[[nodiscard]] Atom to_atom(const GroundAtom& a);

} // namespace fosm
