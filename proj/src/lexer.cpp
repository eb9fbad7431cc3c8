#include "lexer.hpp"

#include <array>
#include <cctype>

namespace fosm::detail {

namespace {
// Longest match first.
constexpr std::array<std::string_view, 16> multi_symbols{
    "<->", ":-", "->", "!=", "<-", "↔", "⊤", "⊥", "¬", "∧", "∨", "→", "∀", "∃", "≠", "←",
};
constexpr std::string_view single_symbols = "(){}[],.;:|&~=@+-/";

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }
} // namespace

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1, i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n && i < text.size(); ++k, ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
                ++col;
            }
        }
    };
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '%') {
            while (i < text.size() && text[i] != '\n')
                advance(1);
            continue;
        }
        Token tok;
        tok.line = line;
        tok.column = col;
        if (ident_start(c)) {
            std::size_t j = i;
            while (j < text.size() && ident_char(text[j]))
                ++j;
            tok.kind = Token::Kind::Ident;
            tok.text = std::string(text.substr(i, j - i));
            advance(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
                ++j;
            tok.kind = Token::Kind::Number;
            tok.text = std::string(text.substr(i, j - i));
            advance(j - i);
        } else if (c == '#') {
            std::size_t j = i + 1;
            while (j < text.size() && ident_char(text[j]))
                ++j;
            if (j == i + 1)
                throw ParseError("expected directive name after '#'", line, col);
            tok.kind = Token::Kind::Directive;
            tok.text = std::string(text.substr(i, j - i));
            advance(j - i);
        } else {
            bool matched = false;
            for (auto sym : multi_symbols) {
                if (text.substr(i, sym.size()) == sym) {
                    tok.kind = Token::Kind::Symbol;
                    tok.text = std::string(sym);
                    advance(sym.size());
                    matched = true;
                    break;
                }
            }
            if (!matched) {
                if (single_symbols.find(c) == std::string_view::npos)
                    throw ParseError(std::string("unexpected character '") + c + "'", line, col);
                tok.kind = Token::Kind::Symbol;
                tok.text = std::string(1, c);
                advance(1);
            }
        }
        out.push_back(std::move(tok));
    }
    Token end;
    end.line = line;
    end.column = col;
    out.push_back(end);
    return out;
}

} // namespace fosm::detail
