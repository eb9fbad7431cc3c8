#pragma once
// The SM operator as a syntactic construction.

#include <fosm/formula.hpp>
#include <fosm/printer.hpp>

#include <string>

namespace fosm {

/// SM[F; p] = F ∧ ¬∃u((u < p) ∧ F*(u)). Predicate variables u are kept as
/// ordinary predicate constants with names fresh for F.
struct SecondOrderSentence {
    Formula formula;
    PredicateList intensional;
    PredicateList variables;
    Formula less;    // u < p
    Formula starred; // F*(u)

    /// (u < p) ∧ F*(u), the body of the second-order quantifier.
    [[nodiscard]] Formula matrix() const { return Formula::conj(less, starred); }
};

/// Throws ArityError unless `u` matches `p` pairwise.
[[nodiscard]] Formula star_transform(const Formula& f, const PredicateList& p, const PredicateList& u);
[[nodiscard]] Formula u_less_than_p(const PredicateList& p, const PredicateList& u);
[[nodiscard]] SecondOrderSentence build_sm(const Formula& f, const PredicateList& p);
/// ⋀ ∀x(pᵢ(x) ∨ ¬pᵢ(x)); ⊤ for the empty list.
[[nodiscard]] Formula choice_formula(const PredicateList& p);

/// `F ∧ ¬∃u1 u2((u1, u2) < (p, q)) ∧ F*)` style rendering.
[[nodiscard]] std::string to_string(const SecondOrderSentence& s, const PrintOptions& opts = {});

} // namespace fosm
