#pragma once
// Formulas compiled against a fixed interpretation frame: predicate atoms
// point straight at extents, variables at environment slots. Extents may be
// changed between evaluations; the frame itself must outlive the object.

#include <fosm/interpretation.hpp>

#include <map>
#include <vector>

namespace fosm::detail {

class CompiledFormula {
public:
    /// `overrides` redirects predicates (typically SM predicate variables)
    /// to extents owned by the caller. Throws UncoveredConstantError for any
    /// constant the frame does not cover and Error for free variables.
    CompiledFormula(const Formula& f, const PartialInterpretation& frame,
                    const std::map<Predicate, const Extent*>& overrides = {});

    [[nodiscard]] bool eval() const;

private:
    struct Term {
        enum class Kind : unsigned char { Slot, Element, Apply } kind;
        int value = 0;
        const std::vector<int>* table = nullptr;
        std::vector<Term> args;
    };
    struct Node {
        Formula::Kind op;
        int left = -1, right = -1;
        int slot = -1;
        const Extent* extent = nullptr;
        std::vector<Term> terms;
    };

    int compile(const Formula& f, std::vector<std::pair<std::string, int>>& scope, int depth);
    Term compile_term(const fosm::Term& t, const std::vector<std::pair<std::string, int>>& scope) const;
    [[nodiscard]] int value(const Term& t, std::vector<int>& env) const;
    [[nodiscard]] bool eval(int node, std::vector<int>& env) const;

    const PartialInterpretation& frame_;
    std::map<Predicate, const Extent*> overrides_;
    std::vector<Node> nodes_;
    int root_ = -1;
    int slots_ = 0;
    int base_ = 0;
};

} // namespace fosm::detail
