#include "formula_parser_impl.hpp"

#include <fosm/error.hpp>
#include <fosm/formula_parser.hpp>
#include <fosm/program.hpp>

#include <cctype>
#include <map>

namespace fosm {

namespace {

using detail::Token;
using detail::TokenStream;

struct Use {
    int arity;
    bool parameterized;
    std::size_t line, column;
};

class ProgramParser {
public:
    explicit ProgramParser(std::string_view text) : ts_(detail::tokenize(text)) {}

    Program run() {
        while (!ts_.at_end())
            statement();
        check_names();
        program_signature(prog_).validate();
        return std::move(prog_);
    }

private:
    void statement() {
        const Token& t = ts_.peek();
        if (t.kind == Token::Kind::Directive) {
            directive();
            return;
        }
        Rule r;
        r.line = t.line;
        r.section = section_;
        if (ts_.peek().is("{")) {
            ts_.next();
            r.choice = true;
            r.head.push_back({atom(), false});
            if (ts_.peek().is(";") || ts_.peek().is("|"))
                ts_.fail("choice rules take a single atom");
            ts_.expect("}");
        } else if (!at_neck()) {
            do {
                bool negated = ts_.accept_word("not");
                r.head.push_back({atom(), negated});
            } while (ts_.accept(";") || ts_.accept("|"));
        }
        if (accept_neck())
            r.body = body();
        else if (r.head.empty())
            ts_.fail("expected rule");
        ts_.expect(".");
        prog_.rules.push_back(std::move(r));
    }

    bool at_neck() const {
        const Token& t = ts_.peek();
        return t.is(":-") || t.is("<-") || t.is("←");
    }
    bool accept_neck() { return ts_.accept(":-") || ts_.accept("<-") || ts_.accept("←"); }

    std::vector<Literal> body() {
        std::vector<Literal> out;
        if (ts_.peek().is("."))
            return out;
        do {
            out.push_back(literal(true));
        } while (ts_.accept(","));
        return out;
    }

    Literal literal(bool allow_aggregate) {
        if (ts_.accept_word("not")) {
            if (ts_.accept_word("not"))
                return Literal::double_negative(atom());
            if (at_aggregate()) {
                if (!allow_aggregate)
                    ts_.fail("aggregates cannot be nested");
                return aggregate(true);
            }
            return Literal::negative(atom());
        }
        if (at_aggregate()) {
            if (!allow_aggregate)
                ts_.fail("aggregates cannot be nested");
            return aggregate(false);
        }
        const Token& t = ts_.peek();
        if (t.kind == Token::Kind::Ident && !ts_.peek(1).is("@")) {
            // Either an atom or the left side of a (dis)equality.
            std::size_t depth = 0, ahead = 1;
            if (ts_.peek(1).is("(")) {
                do {
                    const Token& u = ts_.peek(ahead);
                    if (u.kind == Token::Kind::End)
                        break;
                    if (u.is("("))
                        ++depth;
                    else if (u.is(")"))
                        --depth;
                    ++ahead;
                } while (depth > 0);
            }
            if (!is_comparison(ts_.peek(ahead)))
                return Literal::positive(atom());
        } else if (t.kind != Token::Kind::Number) {
            if (t.kind == Token::Kind::Ident)
                return Literal::positive(atom());
            ts_.fail("expected literal");
        }
        Term lhs = detail::parse_term(ts_, bound_);
        if (!is_comparison(ts_.peek()))
            ts_.fail("expected '=' or '!='");
        bool equal = ts_.next().is("=");
        Term rhs = detail::parse_term(ts_, bound_);
        return equal ? Literal::equal(std::move(lhs), std::move(rhs))
                     : Literal::not_equal(std::move(lhs), std::move(rhs));
    }

    static bool is_comparison(const Token& t) { return t.is("=") || t.is("!=") || t.is("≠"); }

    bool at_aggregate() const { return ts_.peek().kind == Token::Kind::Number && ts_.peek(1).is("{"); }

    Literal aggregate(bool negated) {
        const Token& num = ts_.next();
        int bound = std::stoi(num.text);
        if (bound < 1)
            TokenStream::fail_at(num, "aggregate bound must be at least 1");
        ts_.expect("{");
        std::vector<std::string> vars;
        do {
            vars.push_back(ts_.expect_ident().text);
        } while (ts_.accept(","));
        ts_.expect(":");
        std::size_t mark = bound_.size();
        bound_.insert(bound_.end(), vars.begin(), vars.end());
        std::vector<Literal> elements;
        do {
            elements.push_back(literal(false));
        } while (ts_.accept(","));
        bound_.resize(mark);
        ts_.expect("}");
        return Literal::count(bound, std::move(vars), std::move(elements), negated);
    }

    Atom atom() {
        const Token& name = ts_.peek();
        if (name.kind != Token::Kind::Ident)
            ts_.fail("expected atom");
        if (is_variable_name(name.text))
            ts_.fail("predicate name expected");
        Token tok = ts_.next();
        Atom a;
        if (ts_.accept("@")) {
            ts_.expect("(");
            a.step = detail::parse_step(ts_, {});
        }
        if (ts_.accept("(")) {
            do {
                a.args.push_back(detail::parse_term(ts_, bound_));
            } while (ts_.accept(","));
            ts_.expect(")");
        }
        a.predicate = Predicate{tok.text, static_cast<int>(a.args.size())};
        record(tok, a.predicate.arity, a.step.has_value());
        return a;
    }

    void record(const Token& tok, int arity, bool parameterized) {
        auto [it, fresh] = uses_.emplace(tok.text, Use{arity, parameterized, tok.line, tok.column});
        if (fresh)
            return;
        if (it->second.arity != arity)
            throw ArityError(std::to_string(tok.line) + ":" + std::to_string(tok.column) + ": predicate '" +
                             tok.text + "' used with arities " + std::to_string(it->second.arity) + " and " +
                             std::to_string(arity));
        if (it->second.parameterized != parameterized)
            TokenStream::fail_at(tok, "predicate '" + tok.text + "' used both with and without a step");
    }

    void record_formula(const Formula& f, const Token& at) {
        for_each_occurrence(f, [&](const Formula& sub, int) {
            if (sub.kind() != Formula::Kind::Atom)
                return;
            Token tok = at;
            tok.text = sub.predicate().name;
            record(tok, sub.predicate().arity, sub.step().has_value());
        });
    }

    // Plain predicates must not collide with the names parameterized atoms
    // instantiate to.
    void check_names() const {
        for (const auto& [name, use] : uses_) {
            if (use.parameterized)
                continue;
            auto underscore = name.rfind('_');
            if (underscore == std::string::npos || underscore + 1 == name.size())
                continue;
            bool digits = true;
            for (std::size_t i = underscore + 1; i < name.size(); ++i)
                digits = digits && std::isdigit(static_cast<unsigned char>(name[i]));
            if (!digits)
                continue;
            auto base = uses_.find(name.substr(0, underscore));
            if (base != uses_.end() && base->second.parameterized)
                throw ParseError("predicate '" + name + "' collides with an instance of parameterized '" +
                                     base->first + "'",
                                 use.line, use.column);
        }
    }

    void directive() {
        Token d = ts_.next();
        if (d.text == "#base") {
            section_ = Section::Base;
            prog_.sectioned = true;
        } else if (d.text == "#cumulative" || d.text == "#volatile") {
            section_ = d.text == "#cumulative" ? Section::Cumulative : Section::Volatile;
            prog_.sectioned = true;
            prog_.counter = ts_.expect_ident().text;
        } else if (d.text == "#input" || d.text == "#output") {
            auto& slot = d.text == "#input" ? prog_.inputs : prog_.outputs;
            PredicateList list = predicate_specs();
            slot = slot ? list_union(*slot, list) : list;
        } else if (d.text == "#formula") {
            Rule r;
            r.line = d.line;
            r.section = section_;
            Token at = ts_.peek();
            r.formula = detail::parse_formula_from(ts_);
            record_formula(*r.formula, at);
            prog_.rules.push_back(std::move(r));
        } else {
            TokenStream::fail_at(d, "unknown directive");
        }
        ts_.expect(".");
    }

    PredicateList predicate_specs() {
        PredicateList out;
        if (ts_.peek().is("."))
            return out;
        do {
            Token name = ts_.expect_ident();
            int arity = 0;
            if (ts_.accept("/")) {
                if (ts_.peek().kind != Token::Kind::Number)
                    ts_.fail("expected arity");
                arity = std::stoi(ts_.next().text);
            }
            record(name, arity, false);
            Predicate p{name.text, arity};
            if (!contains(out, p))
                out.push_back(p);
        } while (ts_.accept(","));
        return out;
    }

    TokenStream ts_;
    Program prog_;
    Section section_ = Section::Base;
    std::vector<std::string> bound_;
    std::map<std::string, Use> uses_;
};

} // namespace

Program parse_program(std::string_view text) { return ProgramParser(text).run(); }

} // namespace fosm
