#pragma once
// Text input: integers, + - * / ^, parentheses, symbols [A-Za-z][A-Za-z0-9_]*
// with x[3]-style indexed names normalized to x_3. parse_rational covers the
// polynomial/rational grammar; the richer expression surface (ln, polylog,
// Hlog, zeta[...]) lives in expr.hpp and reuses this lexer.

#include <stdexcept>
#include <string>

#include "hyperlog/ratfun.hpp"
#include "hyperlog/word.hpp"

namespace hlog {

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, size_t position)
        : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
          pos(position) {}
    size_t pos;
};

RationalFunction parse_rational(const std::string& text);
// parse_rational restricted to constant denominators.
Polynomial parse_poly(const std::string& text);
// Word literal `[s1, s2, ...]` with rational-expression letters; `[]` is the
// empty word.
Word parse_word(const std::string& text);
// A single (possibly indexed) symbol name.
Sym parse_symbol(const std::string& text);

namespace detail {

// Shared lexer; also used by the expression parser.
struct Lexer {
    enum Kind { End, Int, Name, Op };

    explicit Lexer(const std::string& text) : src(text) { advance(); }

    const std::string& src;
    size_t pos = 0;       // start of the current token
    size_t next_pos = 0;  // scan position
    Kind kind = End;
    std::string text;  // Name: identifier; Op: single character; Int: digits

    void advance();
    [[noreturn]] void fail(const std::string& why) const { throw ParseError(why, pos); }
    bool is_op(char c) const { return kind == Op && text[0] == c; }
    void expect_op(char c);
};

}  // namespace detail

}  // namespace hlog
