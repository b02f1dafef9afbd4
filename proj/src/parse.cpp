#include "mptri/parse.hpp"

#include <cctype>
#include <string>

namespace mptri {

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;
    VarOrderPtr order;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    bool accept(char c) {
        if (peek_is(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos);
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    mpz_class parse_integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected an integer", pos);
        return mpz_class(std::string(text.substr(start, pos - start)), 10);
    }

    Poly parse_atom() {
        skip_ws();
        if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
        char c = text[pos];
        if (c == '(') {
            ++pos;
            Poly e = parse_expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Poly(order, parse_integer());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            std::string name(text.substr(start, pos - start));
            auto idx = order->index_of(name);
            if (!idx) throw ParseError("unknown identifier '" + name + "'", start);
            return Poly::variable(order, *idx);
        }
        throw ParseError("unexpected character", pos);
    }

    Poly parse_power() {
        Poly base = parse_atom();
        if (accept('^')) {
            skip_ws();
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                throw ParseError("exponent must be a non-negative integer literal", pos);
            mpz_class e = parse_integer();
            if (!e.fits_uint_p()) throw ParseError("exponent too large", pos);
            return base.pow(static_cast<unsigned>(e.get_ui()));
        }
        return base;
    }

    Poly parse_factor() {
        skip_ws();
        bool neg = false;
        while (peek_is('-') || peek_is('+')) {
            if (accept('-')) neg = !neg;
            else accept('+');
        }
        Poly p = parse_power();
        return neg ? -p : p;
    }

    Poly parse_term() {
        Poly p = parse_factor();
        while (accept('*')) p *= parse_factor();
        return p;
    }

    Poly parse_expr() {
        Poly p = parse_term();
        while (true) {
            if (accept('+')) p += parse_term();
            else if (accept('-')) p -= parse_term();
            else break;
        }
        return p;
    }
};

} // namespace

Poly parse_poly(std::string_view text, const VarOrderPtr& order) {
    Parser p{text, 0, order};
    Poly out = p.parse_expr();
    if (!p.at_end()) throw ParseError("unexpected trailing input", p.pos);
    return out;
}

} // namespace mptri
