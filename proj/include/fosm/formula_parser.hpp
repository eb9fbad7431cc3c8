#pragma once

#include <fosm/formula.hpp>

#include <string_view>

namespace fosm {

/// Variable naming convention shared by formula and program text: names
/// starting with an uppercase letter or underscore, and `x`, `y`, `z`
/// optionally followed by digits or primes. Everything else in term
/// position is an object (or function) constant.
[[nodiscard]] bool is_variable_name(std::string_view name);

/// Parses the printer's syntax (Unicode or ASCII connectives). Identifiers
/// bound by an enclosing quantifier are always variables.
///
/// Grammar, loosest first: `F -> F` (right-assoc), `F <-> F` (expanded to
/// both implications), `F | F`, `F & F`, then
/// `~F`, `not F`, `forall x F`, `∀x F`, `(F)`, `#true`/`⊤`, `#false`/`⊥`,
/// atoms `p(t,..)`, parameterized atoms `p@(t+1)(X)`, `t = t`, `t != t`.
[[nodiscard]] Formula parse_formula(std::string_view text);

} // namespace fosm
