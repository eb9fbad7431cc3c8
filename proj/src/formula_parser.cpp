#include "formula_parser_impl.hpp"

#include <fosm/formula_parser.hpp>

#include <algorithm>
#include <cctype>

namespace fosm {

bool is_variable_name(std::string_view name) {
    if (name.empty())
        return false;
    char c = name.front();
    if (std::isupper(static_cast<unsigned char>(c)) || c == '_')
        return true;
    if (c != 'x' && c != 'y' && c != 'z')
        return false;
    return std::all_of(name.begin() + 1, name.end(),
                       [](char d) { return std::isdigit(static_cast<unsigned char>(d)) || d == '\''; });
}

namespace detail {

namespace {

bool is_bound(const std::vector<std::string>& bound, const std::string& name) {
    return std::find(bound.begin(), bound.end(), name) != bound.end();
}

bool at_equality(const TokenStream& ts) {
    const Token& t = ts.peek();
    return t.is("=") || t.is("!=") || t.is("≠");
}

std::vector<Term> parse_term_list(TokenStream& ts, const std::vector<std::string>& bound) {
    std::vector<Term> out;
    ts.expect("(");
    do {
        out.push_back(parse_term(ts, bound));
    } while (ts.accept(","));
    ts.expect(")");
    return out;
}

class FormulaParser {
public:
    explicit FormulaParser(TokenStream& ts) : ts_(ts) {}

    Formula implication() {
        Formula lhs = disjunction();
        if (ts_.accept("->") || ts_.accept("→"))
            return Formula::implies(lhs, implication());
        if (ts_.accept("<->") || ts_.accept("↔")) {
            Formula rhs = implication();
            return Formula::conj(Formula::implies(lhs, rhs), Formula::implies(rhs, lhs));
        }
        return lhs;
    }

private:
    Formula disjunction() {
        Formula acc = conjunction();
        while (ts_.accept("|") || ts_.accept("∨"))
            acc = Formula::disj(acc, conjunction());
        return acc;
    }

    Formula conjunction() {
        Formula acc = unary();
        while (ts_.accept("&") || ts_.accept("∧"))
            acc = Formula::conj(acc, unary());
        return acc;
    }

    Formula unary() {
        const Token& t = ts_.peek();
        if (ts_.accept("¬") || ts_.accept("~") || ts_.accept_word("not"))
            return Formula::negation(unary());
        if (t.is("∀") || t.is_word("forall") || t.is("∃") || t.is_word("exists")) {
            bool universal = t.is("∀") || t.is_word("forall");
            ts_.next();
            std::string var = ts_.expect_ident().text;
            bound_.push_back(var);
            Formula body = unary();
            bound_.pop_back();
            return universal ? Formula::forall(var, body) : Formula::exists(var, body);
        }
        if (ts_.accept("(")) {
            Formula f = implication();
            ts_.expect(")");
            return f;
        }
        if (ts_.accept("⊤"))
            return Formula::truth();
        if (ts_.accept("⊥"))
            return Formula::falsity();
        if (t.kind == Token::Kind::Directive) {
            if (t.text == "#true") {
                ts_.next();
                return Formula::truth();
            }
            if (t.text == "#false") {
                ts_.next();
                return Formula::falsity();
            }
        }
        return atomic();
    }

    Formula atomic() {
        const Token& head = ts_.peek();
        if (head.kind != Token::Kind::Ident && head.kind != Token::Kind::Number)
            ts_.fail("expected formula");
        Token name = ts_.next();
        if (name.kind == Token::Kind::Ident && ts_.peek().is("@")) {
            ts_.next();
            ts_.expect("(");
            StepExpr step = parse_step(ts_, {});
            std::vector<Term> args;
            if (ts_.peek().is("("))
                args = parse_term_list(ts_, bound_);
            Predicate p{name.text, static_cast<int>(args.size())};
            return Formula::atom(std::move(p), std::move(args), step);
        }
        std::vector<Term> args;
        bool applied = ts_.peek().is("(");
        if (applied)
            args = parse_term_list(ts_, bound_);
        if (at_equality(ts_)) {
            Term lhs = applied ? Term::function(name.text, std::move(args)) : name_term(name.text);
            bool negated = !ts_.next().is("=");
            Term rhs = parse_term(ts_, bound_);
            Formula eq = Formula::equal(std::move(lhs), std::move(rhs));
            return negated ? Formula::negation(eq) : eq;
        }
        if (name.kind == Token::Kind::Number)
            TokenStream::fail_at(name, "expected formula");
        Predicate p{name.text, static_cast<int>(args.size())};
        return Formula::atom(std::move(p), std::move(args));
    }

    Term name_term(const std::string& name) const {
        if (is_bound(bound_, name) || is_variable_name(name))
            return Term::variable(name);
        return Term::constant(name);
    }

    TokenStream& ts_;
    std::vector<std::string> bound_;
};

} // namespace

Term parse_term(TokenStream& ts, const std::vector<std::string>& bound) {
    const Token& t = ts.peek();
    if (t.kind == Token::Kind::Number) {
        return Term::constant(ts.next().text);
    }
    if (t.kind != Token::Kind::Ident)
        ts.fail("expected term");
    std::string name = ts.next().text;
    if (ts.peek().is("(")) {
        auto args = parse_term_list(ts, bound);
        return Term::function(std::move(name), std::move(args));
    }
    if (is_bound(bound, name) || is_variable_name(name))
        return Term::variable(std::move(name));
    return Term::constant(std::move(name));
}

StepExpr parse_step(TokenStream& ts, std::string_view counter) {
    StepExpr step;
    const Token& t = ts.peek();
    if (t.kind == Token::Kind::Number) {
        step.kind = StepExpr::Kind::Constant;
        step.offset = std::stoi(ts.next().text);
    } else {
        const Token& name = ts.expect_ident();
        if (!counter.empty() && name.text != counter)
            TokenStream::fail_at(name, "step expression must use the counter '" + std::string(counter) + "'");
        if (ts.accept("+")) {
            step.kind = StepExpr::Kind::Plus;
        } else if (ts.accept("-")) {
            step.kind = StepExpr::Kind::Minus;
        } else {
            step.kind = StepExpr::Kind::Counter;
        }
        if (step.kind != StepExpr::Kind::Counter) {
            if (ts.peek().kind != Token::Kind::Number)
                ts.fail("expected step offset");
            step.offset = std::stoi(ts.next().text);
        }
    }
    ts.expect(")");
    return step;
}

Formula parse_formula_from(TokenStream& ts) { return FormulaParser(ts).implication(); }

} // namespace detail

Formula parse_formula(std::string_view text) {
    detail::TokenStream ts(detail::tokenize(text));
    Formula f = detail::parse_formula_from(ts);
    if (!ts.at_end())
        ts.fail("unexpected trailing input");
    return f;
}

} // namespace fosm
