#include "hyperlog/parse.hpp"

#include <cctype>

#include "hyperlog/expr.hpp"

namespace hlog {
namespace detail {

void Lexer::advance() {
    while (next_pos < src.size() && std::isspace((unsigned char)src[next_pos]))
        next_pos++;
    pos = next_pos;
    if (next_pos >= src.size()) {
        kind = End;
        text.clear();
        return;
    }
    char c = src[next_pos];
    if (std::isdigit((unsigned char)c)) {
        size_t start = next_pos;
        while (next_pos < src.size() && std::isdigit((unsigned char)src[next_pos]))
            next_pos++;
        kind = Int;
        text = src.substr(start, next_pos - start);
        return;
    }
    if (std::isalpha((unsigned char)c)) {
        size_t start = next_pos;
        while (next_pos < src.size() &&
               (std::isalnum((unsigned char)src[next_pos]) || src[next_pos] == '_'))
            next_pos++;
        kind = Name;
        text = src.substr(start, next_pos - start);
        return;
    }
    if (std::string("+-*/^()[],").find(c) != std::string::npos) {
        kind = Op;
        text.assign(1, c);
        next_pos++;
        return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", next_pos);
}

void Lexer::expect_op(char c) {
    if (!is_op(c)) fail(std::string("expected '") + c + "'");
    advance();
}

}  // namespace detail

namespace {

using detail::Lexer;

RationalFunction parse_sum(Lexer& lx);

// name or name[int], normalized to name_int.
std::string read_symbol_name(Lexer& lx) {
    if (lx.kind != Lexer::Name) lx.fail("expected symbol name");
    std::string name = lx.text;
    lx.advance();
    if (lx.is_op('[')) {
        lx.advance();
        std::string idx;
        if (lx.is_op('-')) {
            idx = "-";
            lx.advance();
        }
        if (lx.kind != Lexer::Int) lx.fail("expected integer index");
        idx += lx.text;
        lx.advance();
        lx.expect_op(']');
        name += "_" + idx;
    }
    return name;
}

long parse_exponent(Lexer& lx) {
    bool paren = lx.is_op('(');
    if (paren) lx.advance();
    long sign = 1;
    if (lx.is_op('-')) {
        sign = -1;
        lx.advance();
    }
    if (lx.kind != Lexer::Int) lx.fail("expected integer exponent");
    long e = std::stol(lx.text);
    lx.advance();
    if (paren) lx.expect_op(')');
    return sign * e;
}

RationalFunction parse_atom(Lexer& lx) {
    if (lx.kind == Lexer::Int) {
        BigRational v(lx.text);
        lx.advance();
        return RationalFunction(v);
    }
    if (lx.kind == Lexer::Name) {
        std::string name = read_symbol_name(lx);
        if (lx.is_op('('))
            lx.fail("function call '" + name + "(...)' is not a rational expression");
        return RationalFunction::variable(sym(name));
    }
    if (lx.is_op('(')) {
        lx.advance();
        RationalFunction r = parse_sum(lx);
        lx.expect_op(')');
        return r;
    }
    lx.fail("expected integer, symbol or '('");
}

RationalFunction parse_power(Lexer& lx) {
    RationalFunction base = parse_atom(lx);
    if (lx.is_op('^')) {
        lx.advance();
        base = base.pow(parse_exponent(lx));
    }
    return base;
}

RationalFunction parse_unary(Lexer& lx) {
    bool neg = false;
    while (lx.is_op('-') || lx.is_op('+')) {
        if (lx.is_op('-')) neg = !neg;
        lx.advance();
    }
    RationalFunction r = parse_power(lx);
    return neg ? -r : r;
}

RationalFunction parse_product(Lexer& lx) {
    RationalFunction r = parse_unary(lx);
    while (lx.is_op('*') || lx.is_op('/')) {
        bool div = lx.is_op('/');
        lx.advance();
        RationalFunction rhs = parse_unary(lx);
        r = div ? r / rhs : r * rhs;
    }
    return r;
}

RationalFunction parse_sum(Lexer& lx) {
    RationalFunction r = parse_product(lx);
    while (lx.is_op('+') || lx.is_op('-')) {
        bool sub = lx.is_op('-');
        lx.advance();
        RationalFunction rhs = parse_product(lx);
        r = sub ? r - rhs : r + rhs;
    }
    return r;
}

}  // namespace

RationalFunction parse_rational(const std::string& text) {
    Lexer lx(text);
    RationalFunction r = parse_sum(lx);
    if (lx.kind != Lexer::End) lx.fail("trailing input");
    return r;
}

Word parse_word(const std::string& text) {
    Lexer lx(text);
    lx.expect_op('[');
    std::vector<Letter> ls;
    if (!lx.is_op(']')) {
        ls.push_back(parse_sum(lx));
        while (lx.is_op(',')) {
            lx.advance();
            ls.push_back(parse_sum(lx));
        }
    }
    lx.expect_op(']');
    if (lx.kind != Lexer::End) lx.fail("trailing input");
    return Word(std::move(ls));
}

Polynomial parse_poly(const std::string& text) {
    RationalFunction r = parse_rational(text);
    if (!r.den().is_constant())
        throw ParseError("expected a polynomial, got denominator " + r.den().str(), 0);
    return r.num().scaled(1 / r.den().constant_value());
}

Sym parse_symbol(const std::string& text) {
    Lexer lx(text);
    std::string name = read_symbol_name(lx);
    if (lx.kind != Lexer::End) lx.fail("trailing input after symbol name");
    return sym(name);
}

namespace {

Expression expr_sum(Lexer& lx);

long parse_signed_int(Lexer& lx) {
    long sign = 1;
    while (lx.is_op('-') || lx.is_op('+')) {
        if (lx.is_op('-')) sign = -sign;
        lx.advance();
    }
    if (lx.kind != Lexer::Int) lx.fail("expected integer");
    long v = std::stol(lx.text);
    lx.advance();
    return sign * v;
}

std::vector<int> parse_int_list(Lexer& lx) {
    lx.expect_op('[');
    std::vector<int> idx;
    if (!lx.is_op(']')) {
        idx.push_back((int)parse_signed_int(lx));
        while (lx.is_op(',')) {
            lx.advance();
            idx.push_back((int)parse_signed_int(lx));
        }
    }
    lx.expect_op(']');
    return idx;
}

Word parse_word_body(Lexer& lx) {
    lx.expect_op('[');
    std::vector<Letter> ls;
    if (!lx.is_op(']')) {
        ls.push_back(parse_sum(lx));
        while (lx.is_op(',')) {
            lx.advance();
            ls.push_back(parse_sum(lx));
        }
    }
    lx.expect_op(']');
    return Word(std::move(ls));
}

std::vector<RationalFunction> parse_rational_list(Lexer& lx) {
    lx.expect_op('[');
    std::vector<RationalFunction> rs;
    if (!lx.is_op(']')) {
        rs.push_back(parse_sum(lx));
        while (lx.is_op(',')) {
            lx.advance();
            rs.push_back(parse_sum(lx));
        }
    }
    lx.expect_op(']');
    return rs;
}

bool atom_free(const Expression& e) {
    return e.is_zero() || (e.size() == 1 && e.terms().begin()->first.empty());
}

// ln of a positive constant as a sum of prime ln symbols, ln of anything
// else as Hlog(f, [0]).
Expression expr_log(const RationalFunction& f, Lexer& lx) {
    if (!f.is_constant()) return Expression(PolylogAtom::hyperlog(f, Word{Letter()}));
    BigRational v = f.constant_value();
    if (v <= 0) lx.fail("ln of a nonpositive constant");
    Expression out;
    for (int side = 0; side < 2; side++) {
        BigInt n = side ? v.get_den() : v.get_num();
        RationalFunction s(side ? -1 : 1);
        for (BigInt p = 2; p * p <= n; p = p + 1)
            while (n % p == 0) {
                out += Expression(s * RationalFunction::variable(sym_ln(p.get_si())));
                n /= p;
            }
        if (n > 1) out += Expression(s * RationalFunction::variable(sym_ln(n.get_si())));
    }
    return out;
}

Expression expr_primary(Lexer& lx) {
    if (lx.kind == Lexer::Int) {
        BigRational v(lx.text);
        lx.advance();
        return Expression(RationalFunction(v));
    }
    if (lx.is_op('(')) {
        lx.advance();
        Expression e = expr_sum(lx);
        lx.expect_op(')');
        return e;
    }
    if (lx.kind != Lexer::Name) lx.fail("expected integer, name or '('");
    std::string name = lx.text;
    if (name == "zeta") {
        lx.advance();
        return Expression(zeta_value(parse_int_list(lx)));
    }
    if (name == "delta") {
        lx.advance();
        lx.expect_op('[');
        Sym var = sym(read_symbol_name(lx));
        Sym d;
        if (lx.is_op(',')) {
            lx.advance();
            d = sym_delta(var, parse_sum(lx));
        } else {
            d = sym_delta(var);
        }
        lx.expect_op(']');
        return Expression(RationalFunction::variable(d));
    }
    if (name == "ln") {
        lx.advance();
        if (lx.is_op('[')) {
            lx.advance();
            if (lx.kind != Lexer::Int) lx.fail("expected integer ln base");
            long p = std::stol(lx.text);
            lx.advance();
            lx.expect_op(']');
            return Expression(RationalFunction::variable(sym_ln(p)));
        }
        lx.expect_op('(');
        Expression inner = expr_sum(lx);
        lx.expect_op(')');
        if (!atom_free(inner)) lx.fail("ln of a polylogarithm");
        return expr_log(inner.rational_part(), lx);
    }
    if (name == "Hlog") {
        lx.advance();
        lx.expect_op('(');
        RationalFunction arg = parse_sum(lx);
        lx.expect_op(',');
        Word w = parse_word_body(lx);
        lx.expect_op(')');
        return Expression(PolylogAtom::hyperlog(arg, std::move(w)));
    }
    if (name == "Mpl") {
        lx.advance();
        lx.expect_op('(');
        std::vector<int> n = parse_int_list(lx);
        lx.expect_op(',');
        std::vector<RationalFunction> z = parse_rational_list(lx);
        lx.expect_op(')');
        if (n.size() != z.size()) lx.fail("Mpl needs as many arguments as indices");
        return Expression(PolylogAtom::mpl(std::move(n), std::move(z)));
    }
    if (name == "Hpl") {
        lx.advance();
        lx.expect_op('(');
        std::vector<int> m = parse_int_list(lx);
        lx.expect_op(',');
        RationalFunction arg = parse_sum(lx);
        lx.expect_op(')');
        return Expression(PolylogAtom::hpl(std::move(m), arg));
    }
    if (name == "RegInf") {
        lx.advance();
        lx.expect_op('(');
        Word w = parse_word_body(lx);
        lx.expect_op(')');
        return Expression(PolylogAtom::reg_inf_word(std::move(w)));
    }
    if (name == "pi") {
        lx.advance();
        return Expression(RationalFunction::variable(sym_pi()));
    }
    if (name == "I") {
        lx.advance();
        return Expression(RationalFunction::variable(sym_i()));
    }
    if (name == "ln2") {
        lx.advance();
        return Expression(RationalFunction::variable(sym_ln(2)));
    }
    std::string full = read_symbol_name(lx);
    if (lx.is_op('(')) lx.fail("unknown function '" + full + "'");
    return Expression(RationalFunction::variable(sym(full)));
}

Expression expr_power(Lexer& lx) {
    Expression base = expr_primary(lx);
    if (!lx.is_op('^')) return base;
    lx.advance();
    long e = parse_exponent(lx);
    if (e < 0) {
        if (!atom_free(base)) lx.fail("negative power of a polylogarithm");
        return Expression(base.rational_part().pow(e));
    }
    Expression out{RationalFunction(1)};
    for (long i = 0; i < e; i++) out = out * base;
    return out;
}

Expression expr_unary(Lexer& lx) {
    bool neg = false;
    while (lx.is_op('-') || lx.is_op('+')) {
        if (lx.is_op('-')) neg = !neg;
        lx.advance();
    }
    Expression e = expr_power(lx);
    return neg ? -e : e;
}

Expression expr_product(Lexer& lx) {
    Expression e = expr_unary(lx);
    while (lx.is_op('*') || lx.is_op('/')) {
        bool div = lx.is_op('/');
        lx.advance();
        Expression rhs = expr_unary(lx);
        if (div) {
            if (!atom_free(rhs)) lx.fail("division by a polylogarithm");
            RationalFunction r = rhs.rational_part();
            if (r.is_zero()) lx.fail("division by zero");
            e = e * r.reciprocal();
        } else {
            e = e * rhs;
        }
    }
    return e;
}

Expression expr_sum(Lexer& lx) {
    Expression e = expr_product(lx);
    while (lx.is_op('+') || lx.is_op('-')) {
        bool sub = lx.is_op('-');
        lx.advance();
        Expression rhs = expr_product(lx);
        e = sub ? e - rhs : e + rhs;
    }
    return e;
}

}  // namespace

Expression parse_expression(const std::string& text) {
    Lexer lx(text);
    Expression e = expr_sum(lx);
    if (lx.kind != Lexer::End) lx.fail("trailing input");
    return e;
}

}  // namespace hlog
