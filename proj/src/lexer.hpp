#pragma once
// Tokenizer shared by the program and formula parsers.

#include <fosm/error.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace fosm::detail {

struct Token {
    enum class Kind { Ident, Number, Directive, Symbol, End };
    Kind kind = Kind::End;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;

    [[nodiscard]] bool is(std::string_view sym) const { return kind == Kind::Symbol && text == sym; }
    [[nodiscard]] bool is_word(std::string_view w) const { return kind == Kind::Ident && text == w; }
};

[[nodiscard]] std::vector<Token> tokenize(std::string_view text);

class TokenStream {
public:
    explicit TokenStream(std::vector<Token> toks) : toks_(std::move(toks)) {}

    [[nodiscard]] const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = pos_ + ahead;
        return i < toks_.size() ? toks_[i] : toks_.back();
    }
    const Token& next() {
        const Token& t = peek();
        if (pos_ < toks_.size() - 1)
            ++pos_;
        return t;
    }
    bool accept(std::string_view sym) {
        if (peek().is(sym)) {
            next();
            return true;
        }
        return false;
    }
    bool accept_word(std::string_view w) {
        if (peek().is_word(w)) {
            next();
            return true;
        }
        return false;
    }
    const Token& expect(std::string_view sym) {
        if (!peek().is(sym))
            fail("expected '" + std::string(sym) + "'");
        return next();
    }
    const Token& expect_ident() {
        if (peek().kind != Token::Kind::Ident)
            fail("expected identifier");
        return next();
    }
    [[nodiscard]] bool at_end() const { return peek().kind == Token::Kind::End; }

    [[noreturn]] void fail(const std::string& msg) const { fail_at(peek(), msg); }
    [[noreturn]] static void fail_at(const Token& t, const std::string& msg) {
        std::string found = t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
        throw ParseError(msg + ", found " + found, t.line, t.column);
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

} // namespace fosm::detail
