#pragma once
// Finite model theory by exhaustive enumeration: satisfaction, p-stable
// models, answer sets, and the grounding/reduct oracle for ground programs.

#include <fosm/interpretation.hpp>
#include <fosm/program.hpp>

#include <cstdint>
#include <vector>

namespace fosm {

struct EngineOptions {
    /// Cap on the number of candidate extents any single enumeration may visit.
    std::uint64_t max_candidates = std::uint64_t{1} << 24;
    /// Worker threads for candidate enumeration; results do not depend on it.
    unsigned jobs = 1;
};

/// Classical satisfaction of a sentence; throws UncoveredConstantError.
[[nodiscard]] bool evaluate(const Interpretation& i, const Formula& f);

/// I ⊨ SM[F; p], deciding the second-order quantifier by enumerating every
/// u strictly below p's extents in I.
[[nodiscard]] bool satisfies_sm(const Interpretation& i, const Formula& f, const PredicateList& p,
                                const EngineOptions& opts = {});

/// Every extension of `fixed` by extents for `p` (over the same universe)
/// that satisfies SM[F; p], ordered by their atoms over `p`. `fixed` must
/// cover every other constant of F.
[[nodiscard]] std::vector<PartialInterpretation> stable_models(const Formula& f, const PredicateList& p,
                                                               const PartialInterpretation& fixed,
                                                               const EngineOptions& opts = {});

/// σ(F) for search: throws UnsupportedError on function constants and Error
/// when F needs a universe but has no object constant.
[[nodiscard]] Signature herbrand_signature(const Formula& f);

/// Herbrand interpretations of σ(F) satisfying SM[F; pr(F)], sorted.
[[nodiscard]] std::vector<AtomSet> answer_sets(const Formula& f, const EngineOptions& opts = {});
/// Herbrand models of F over `sig` (every predicate of `sig` varies), sorted.
[[nodiscard]] std::vector<AtomSet> herbrand_models(const Formula& f, const Signature& sig,
                                                   const EngineOptions& opts = {});

/// Answer sets of a ground program by the reduct-and-minimal-model
/// definition, sharing no code with the SM machinery. Choice rules are
/// desugared first. Throws UnsupportedError for non-ground input,
/// aggregates or `#formula` statements.
[[nodiscard]] std::vector<AtomSet> gl_answer_sets(const Program& ground, const EngineOptions& opts = {});
[[nodiscard]] std::vector<AtomSet> gl_answer_sets(const std::vector<Rule>& ground, const EngineOptions& opts = {});

[[nodiscard]] GroundAtom ground_atom(const Atom& a);

} // namespace fosm
