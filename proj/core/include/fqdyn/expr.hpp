#pragma once

#include <string_view>

#include "fqdyn/family.hpp"
#include "fqdyn/places.hpp"
#include "fqdyn/ratfunc.hpp"

namespace fqdyn {

/// Input grammar shared by every front end: integers, the symbols t, x,
/// lambda (plus w for the extension-field generator when k > 1), the
/// operators + - * / ^ and parentheses. Integers reduce into the active
/// field; ^ takes a nonnegative integer literal; / needs a divisor free of
/// the polynomial symbol. Examples: "2*x^5 + x^6", "(t^2+1)/(t+2)".
enum class ExprSymbol { None, X, Lambda };

/// Parse an expression into a polynomial in the designated symbol with
/// coefficients in F_q(t). With ExprSymbol::None the result must be a plain
/// element of F_q(t).
RFPoly parse_sym_poly(std::string_view text, const FieldSpec* spec, ExprSymbol sym);

RatFunc parse_ratfunc(std::string_view text, const FieldSpec* spec);

/// Parse "c1*x^d1 + c2*x^d2" into a binomial family. Throws
/// NotBinomialError for monomials and anything else off-shape.
BinomialFamily parse_family(std::string_view text, const FieldSpec* spec);

/// "inf" or a monic irreducible polynomial in t.
Place parse_place_text(std::string_view text, const FieldSpec* spec);

}  // namespace fqdyn
