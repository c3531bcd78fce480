#include "fqdyn/expr.hpp"

#include <cctype>

#include "fqdyn/factor.hpp"

namespace fqdyn {

namespace {

struct Parser {
    std::string_view text;
    size_t pos = 0;
    const FieldSpec* spec;
    ExprSymbol sym;

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("parse error at position " + std::to_string(pos) + " in '" +
                         std::string(text) + "': " + what);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    long long integer() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        long long v = 0;
        for (size_t i = start; i < pos; ++i) {
            v = v * 10 + (text[i] - '0');
            if (v > (1LL << 60)) fail("integer literal too large");
        }
        return v;
    }

    RFPoly atom() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            RFPoly e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return RFPoly::constant(RatFunc::from_int(spec, integer()));
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
            std::string_view name = text.substr(start, pos - start);
            if (name == "t") return RFPoly::constant(RatFunc::t(spec));
            if (name == "w") {
                if (spec->k < 2) fail("the symbol w needs an extension field (k >= 2)");
                return RFPoly::constant(RatFunc::constant(spec->generator()));
            }
            if (name == "x") {
                if (sym != ExprSymbol::X) fail("the symbol x is not allowed here");
                return RFPoly::monomial(RatFunc::one(spec), 1);
            }
            if (name == "lambda") {
                if (sym != ExprSymbol::Lambda) fail("the symbol lambda is not allowed here");
                return RFPoly::monomial(RatFunc::one(spec), 1);
            }
            fail("unknown symbol '" + std::string(name) + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    RFPoly power() {
        RFPoly base = atom();
        if (eat('^')) {
            long long e = integer();
            if (e > 100000) fail("exponent too large");
            return poly_pow(base, e);
        }
        return base;
    }

    RFPoly unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    RFPoly term() {
        RFPoly v = unary();
        while (true) {
            if (eat('*')) {
                v *= unary();
            } else if (eat('/')) {
                RFPoly d = unary();
                if (d.is_zero()) fail("division by zero");
                if (d.degree() > 0) fail("division by an expression containing the polynomial symbol");
                RatFunc dv = d.coeffs()[0];
                v = v.scaled(dv.inverse());
            } else {
                return v;
            }
        }
    }

    RFPoly expr() {
        RFPoly v = term();
        while (true) {
            if (eat('+')) {
                v += term();
            } else if (peek() == '-') {
                // binary minus; unary() consumes the sign
                v += term();
            } else {
                return v;
            }
        }
    }

    RFPoly run() {
        RFPoly v = expr();
        skip_ws();
        if (pos != text.size()) fail("trailing input");
        return v;
    }
};

}  // namespace

RFPoly parse_sym_poly(std::string_view text, const FieldSpec* spec, ExprSymbol sym) {
    Parser p{text, 0, spec, sym};
    return p.run();
}

RatFunc parse_ratfunc(std::string_view text, const FieldSpec* spec) {
    RFPoly v = parse_sym_poly(text, spec, ExprSymbol::None);
    if (v.degree() > 0) throw ParseError("expected an element of F_q(t), got a polynomial");
    return v.is_zero() ? RatFunc::zero(spec) : v.coeffs()[0];
}

BinomialFamily parse_family(std::string_view text, const FieldSpec* spec) {
    RFPoly f = parse_sym_poly(text, spec, ExprSymbol::X);
    std::vector<std::pair<long long, GFElem>> terms;
    for (size_t i = 0; i < f.coeffs().size(); ++i) {
        const RatFunc& c = f.coeffs()[i];
        if (c.is_zero()) continue;
        if (!c.is_constant())
            throw NotBinomialError("family coefficients must be constants of F_q, got " + c.to_string());
        terms.emplace_back(static_cast<long long>(i), c.constant_value());
    }
    if (terms.size() == 1 && terms[0].first >= 1)
        throw NotBinomialError("monomial family; use the monomial verdict path (constant shift criteria)");
    if (terms.size() != 2 || terms[0].first < 1)
        throw NotBinomialError("expected exactly c1*x^d1 + c2*x^d2 with 1 <= d1 < d2");
    return family_new(spec, terms[0].second, terms[1].second, terms[0].first, terms[1].first);
}

Place parse_place_text(std::string_view text, const FieldSpec* spec) {
    // strip surrounding whitespace for the keyword check
    size_t b = text.find_first_not_of(" \t");
    size_t e = text.find_last_not_of(" \t");
    if (b != std::string_view::npos && text.substr(b, e - b + 1) == "inf")
        return Place::infinity(spec);
    RatFunc v = parse_ratfunc(text, spec);
    if (!v.is_polynomial() || v.num().degree() < 1)
        throw ParseError("a finite place needs a nonconstant polynomial in t");
    GFPoly pi = v.num();
    if (!pi.is_monic()) throw ParseError("a finite place needs a monic polynomial");
    if (!poly_is_irreducible(pi)) throw ParseError("a finite place needs an irreducible polynomial");
    return Place::finite(pi);
}

}  // namespace fqdyn
