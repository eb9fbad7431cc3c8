#pragma once
// Projection, module instantiation and incremental first-order theories.

#include <fosm/modules.hpp>

#include <optional>
#include <string>
#include <vector>

namespace fosm {

/// Order in which the simplification table is tried. BottomUp simplifies
/// children first and tries rules in table order; TopDown tries rules at a
/// node before visiting its children, in reverse table order.
enum class RewriteStrategy { BottomUp, TopDown };

/// Applies the simplification table to a fixpoint. ⊤ is ⊥ → ⊥.
[[nodiscard]] Formula simplify(const Formula& f, RewriteStrategy strategy = RewriteStrategy::BottomUp);

/// Atoms of predicates outside `p` become ⊥, then simplify.
[[nodiscard]] Formula project_formula(const Formula& f, const PredicateList& p,
                                      RewriteStrategy strategy = RewriteStrategy::BottomUp);

/// Drops rules with a positive (or doubly negated) body atom outside `x`,
/// then `not c` literals with c outside `x`. Throws Error on non-ground rules.
[[nodiscard]] std::vector<Rule> project_program(const std::vector<Rule>& rules, const AtomSet& x);

/// Atoms occurring non-negated in some head.
[[nodiscard]] AtomSet head_atoms(const std::vector<Rule>& rules);

/// Every ground instance over the object constants of `sig`, in rule order
/// and then in lexicographic order of the assignment to the sorted rule
/// variables. Throws UnsupportedError on functions, aggregates or `#formula`
/// statements, Error when a non-ground rule meets an empty universe.
[[nodiscard]] Program ground_program(const Program& p, const Signature& sig);
/// Grounds over the program's own object constants.
[[nodiscard]] Program ground_program(const Program& p);

/// (G|I∪O, I, O) with G the grounding and O = head(G|I∪head(G)).
[[nodiscard]] DLPModule dm_instantiate(const Program& p, const AtomSet& inputs);

struct FMResult {
    std::vector<Formula> trace; // F⁰, F¹, …, ending with two equal formulas
    FOModule module;
};

[[nodiscard]] FMResult fm_instantiate(const Formula& f, const PredicateList& inputs,
                                      RewriteStrategy strategy = RewriteStrategy::BottomUp);

/// `F0 = …` lines followed by `FM = (F, {I}, {O})`.
[[nodiscard]] std::string format_trace(const FMResult& r, const PrintOptions& opts = {});

// ---------------------------------------------------------------------------
// Incremental theories
// ---------------------------------------------------------------------------

struct IncrementalTheory {
    Formula base = Formula::truth();
    Formula cumulative = Formula::truth(); // P[t]
    Formula volatile_part = Formula::truth(); // Q[t]

    /// `#base`, `#cumulative` and `#volatile` sections; rules before any
    /// section marker belong to the base. The base is instantiated at 0.
    static IncrementalTheory from_program(const Program& p);

    [[nodiscard]] Formula base_at() const;
    [[nodiscard]] Formula cumulative_at(long long i) const;
    [[nodiscard]] Formula volatile_at(long long i) const;
};

struct AcyclicityViolation {
    std::string earlier; // `B`, `P[i]` or `Q[k]`
    std::string later;
    Predicate predicate; // of the earlier formula, strictly positive in the later
};

struct AcyclicityReport {
    std::vector<AcyclicityViolation> violations;

    [[nodiscard]] bool ok() const { return violations.empty(); }
    [[nodiscard]] std::string describe() const;
};

/// Every pair among B, P[1..k], Q[k] ordered by B ≺ P[1] ≺ … ≺ P[k] ≺ Q[k].
[[nodiscard]] AcyclicityReport acyclic_check(const IncrementalTheory& t, long long k);

class NotAcyclicError : public Error {
public:
    explicit NotAcyclicError(AcyclicityReport report);
    [[nodiscard]] const AcyclicityReport& report() const noexcept { return report_; }

private:
    AcyclicityReport report_;
};

struct AssemblyState {
    long long k = 0;
    std::vector<Formula> instantiated; // B, P[1], …, P[k], Q[k]
    std::vector<FOModule> components;  // FM of each instantiated formula, same order
    std::vector<FOModule> accumulated; // P₀, …, P_k
    FOModule result;                   // R_k
};

/// Throws NotAcyclicError, or InternalError if a join or the output
/// identity Out(Pᵢ) = pr(B ∧ P[1] ∧ … ∧ P[i]) fails.
[[nodiscard]] AssemblyState assemble(const IncrementalTheory& t, long long k);

[[nodiscard]] Formula k_expansion(const IncrementalTheory& t, long long k);

/// Extends each model of the earlier modules by the stable models of the
/// next module, computed once per distinct extent of its inputs. `frame`
/// fixes the universe and object constants. Results are sorted by atoms.
[[nodiscard]] std::vector<PartialInterpretation> solve_in_order(const std::vector<FOModule>& chain,
                                                                const PartialInterpretation& frame,
                                                                const EngineOptions& opts = {});

/// Herbrand models assembled component by component; sorted by atoms.
[[nodiscard]] std::vector<PartialInterpretation> incremental_solve(const IncrementalTheory& t, long long k,
                                                                   const EngineOptions& opts = {});

} // namespace fosm
