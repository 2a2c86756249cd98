#include "recurv/expr.hpp"

#include <cctype>

namespace recurv {
namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Lexer {
    const std::string& src;
    std::size_t pos = 0;
    Tok tok = Tok::End;
    std::size_t tok_pos = 0;
    std::string text;

    explicit Lexer(const std::string& s) : src(s) { advance(); }

    void advance() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
        tok_pos = pos;
        text.clear();
        if (pos >= src.size()) { tok = Tok::End; return; }
        char c = src[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
                text.push_back(src[pos++]);
            tok = Tok::Number;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
                text.push_back(src[pos++]);
            tok = Tok::Ident;
            return;
        }
        ++pos;
        switch (c) {
            case '+': tok = Tok::Plus; return;
            case '-': tok = Tok::Minus; return;
            case '*': tok = Tok::Star; return;
            case '/': tok = Tok::Slash; return;
            case '^': tok = Tok::Caret; return;
            case '(': tok = Tok::LParen; return;
            case ')': tok = Tok::RParen; return;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", tok_pos);
        }
    }
};

struct Parser {
    Lexer lex;
    const Chart& chart;

    Parser(const std::string& s, const Chart& c) : lex(s), chart(c) {}

    RationalFunction parse() {
        RationalFunction v = parse_sum();
        if (lex.tok != Tok::End)
            throw ParseError("unexpected trailing input", lex.tok_pos);
        return v;
    }

    RationalFunction parse_sum() {
        RationalFunction v = parse_product();
        while (lex.tok == Tok::Plus || lex.tok == Tok::Minus) {
            bool plus = lex.tok == Tok::Plus;
            lex.advance();
            RationalFunction r = parse_product();
            v = plus ? v + r : v - r;
        }
        return v;
    }

    RationalFunction parse_product() {
        RationalFunction v = parse_unary();
        while (lex.tok == Tok::Star || lex.tok == Tok::Slash) {
            bool mul = lex.tok == Tok::Star;
            std::size_t at = lex.tok_pos;
            lex.advance();
            RationalFunction r = parse_unary();
            if (!mul && r.is_zero())
                throw ParseError("division by zero expression", at);
            v = mul ? v * r : v / r;
        }
        return v;
    }

    RationalFunction parse_unary() {
        if (lex.tok == Tok::Minus) {
            lex.advance();
            return -parse_unary();
        }
        return parse_power();
    }

    RationalFunction parse_power() {
        RationalFunction base = parse_primary();
        if (lex.tok != Tok::Caret) return base;
        std::size_t at = lex.tok_pos;
        lex.advance();
        long e = parse_exponent();
        if (e < 0 && base.is_zero())
            throw ParseError("zero raised to a negative power", at);
        return base.pow(static_cast<int>(e));
    }

    long parse_exponent() {
        bool paren = false;
        if (lex.tok == Tok::LParen) {
            paren = true;
            lex.advance();
        }
        long s = 1;
        if (lex.tok == Tok::Minus) {
            s = -1;
            lex.advance();
        }
        if (lex.tok != Tok::Number)
            throw ParseError("expected integer exponent", lex.tok_pos);
        long v = std::stol(lex.text);
        lex.advance();
        if (paren) {
            if (lex.tok != Tok::RParen)
                throw ParseError("expected ')' after exponent", lex.tok_pos);
            lex.advance();
        }
        return s * v;
    }

    RationalFunction parse_primary() {
        int n = chart.dimension;
        if (lex.tok == Tok::Number) {
            RationalFunction v = RationalFunction::constant(n, rational_from_string(lex.text));
            lex.advance();
            return v;
        }
        if (lex.tok == Tok::Ident) {
            int idx = chart.index_of(lex.text);
            if (idx < 0)
                throw ParseError("unknown identifier '" + lex.text + "'", lex.tok_pos);
            lex.advance();
            return RationalFunction::variable(n, idx);
        }
        if (lex.tok == Tok::LParen) {
            lex.advance();
            RationalFunction v = parse_sum();
            if (lex.tok != Tok::RParen)
                throw ParseError("expected ')'", lex.tok_pos);
            lex.advance();
            return v;
        }
        throw ParseError("expected number, coordinate, or '('", lex.tok_pos);
    }
};

} // namespace

RationalFunction parse_expression(const std::string& text, const Chart& chart) {
    return Parser(text, chart).parse();
}

} // namespace recurv
