#pragma once

#include "lexer.hpp"

#include <fosm/formula.hpp>

namespace fosm::detail {

/// Parses one formula starting at the current token; stops before any
/// token that cannot continue it.
[[nodiscard]] Formula parse_formula_from(TokenStream& ts);

/// `t`, `t+k`, `t-k` or `k` where `t` is `counter`; the opening '@(' has
/// already been consumed, the closing ')' is consumed here.
[[nodiscard]] StepExpr parse_step(TokenStream& ts, std::string_view counter);

[[nodiscard]] Term parse_term(TokenStream& ts, const std::vector<std::string>& bound);

} // namespace fosm::detail
