#pragma once

#include <fosm/formula.hpp>

#include <string>

namespace fosm {

struct PrintOptions {
    /// ASCII connectives (`&`, `|`, `->`, `~`, `forall`, ...) instead of Unicode.
    bool ascii = false;
};

[[nodiscard]] std::string to_string(const Term& t);
[[nodiscard]] std::string to_string(const StepExpr& s);
/// Minimal-parenthesis rendering. F → ⊥ prints as ¬F and ⊥ → ⊥ as ⊤.
[[nodiscard]] std::string to_string(const Formula& f, const PrintOptions& opts = {});
/// `p` for 0-ary predicates, `p/n` otherwise.
[[nodiscard]] std::string to_string(const Predicate& p);
/// `{p, q/1}` in list order.
[[nodiscard]] std::string to_string(const PredicateList& list);

} // namespace fosm
