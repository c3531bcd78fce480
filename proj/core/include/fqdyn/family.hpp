#pragma once

#include <optional>
#include <string>

#include "fqdyn/rational.hpp"
#include "fqdyn/ratfunc.hpp"

namespace fqdyn {

/// Which theorem-shaped case a binomial family falls into, as a pure
/// function of (p, d1, d2). Writing d_i = p^{l_i} s_i with p not dividing
/// s_i, the weights w_i = p^{l_i}(s_i - 1) decide:
///   LeadDominant   w2 > max(1, w1)
///   StrictLess     w2 < w1
///   Equal          w2 = w1 with s1, s2 > 1
///   Additive       s1 = s2 = 1
///   Quadratic      s1 = 1 with w2 <= 1, forcing d2 = 2 and p > 2
enum class Regime { LeadDominant, StrictLess, Equal, Additive, Quadratic, Other };

std::string regime_name(Regime r);

/// The family f(x) = c1 x^{d1} + c2 x^{d2} with its p-adic degree
/// decomposition and derived exponents.
struct BinomialFamily {
    const FieldSpec* spec;
    GFElem c1, c2;  // nonzero
    long long d1, d2;
    int l1, l2;         // d_i = p^{l_i} s_i
    long long s1, s2;   // p does not divide s_i
    std::optional<Rational> rho;        // (d2-d1)/(p^{l2}-p^{l1}) when l1 != l2
    std::optional<Rational> rho_prime;  // (1-rho)/p^{l1} - s1 + 1 when s2 = 1
    Regime regime;

    long long p() const { return spec->p; }
    long long pl1() const;  // p^{l1}
    long long pl2() const;  // p^{l2}
};

/// Validates 1 <= d1 < d2 and nonzero coefficients, then derives the
/// decomposition, rho, rho' and the regime.
BinomialFamily family_new(const FieldSpec* spec, const GFElem& c1, const GFElem& c2, long long d1,
                          long long d2);

/// f(z) for z in F_q(t).
RatFunc family_eval(const BinomialFamily& fam, const RatFunc& z);
/// f(z) for z in the family's coefficient field.
GFElem family_eval(const BinomialFamily& fam, const GFElem& z);
/// f as a polynomial in x over F_q(t).
RFPoly family_rfpoly(const BinomialFamily& fam);

/// Conjugation to a monic family: c with c^{d2-1} = c2 (the coefficient
/// field may grow), new family c1 c^{1-d1} x^{d1} + x^{d2}, and the scaled
/// points c*alpha, c*beta.
struct MonicNormalization {
    BinomialFamily fam;
    RatFunc calpha, cbeta;
    GFElem c;
};
MonicNormalization monic_normalize(const BinomialFamily& fam, const RatFunc& alpha,
                                   const RatFunc& beta);

/// Carry a family into a larger coefficient field.
BinomialFamily family_embed(const BinomialFamily& fam, const FieldSpec* target);

std::string family_to_string(const BinomialFamily& fam);

}  // namespace fqdyn
