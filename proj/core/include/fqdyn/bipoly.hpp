#pragma once

#include <map>

#include "fqdyn/ratfunc.hpp"

namespace fqdyn {

/// Polynomial in two variables x and lambda over F_q, stored sparsely as an
/// association lambda-degree -> coefficient polynomial in x. Iterate
/// expansions are sparse in lambda while their x-coefficients grow dense.
class BiPoly {
   public:
    explicit BiPoly(const FieldSpec* spec) : spec_(spec) {}
    static BiPoly constant(const FieldSpec* spec, const GFElem& c);
    static BiPoly x_poly(const FieldSpec* spec, GFPoly f);  // polynomial in x alone
    static BiPoly lambda(const FieldSpec* spec);            // the variable lambda

    const FieldSpec* spec() const { return spec_; }
    const std::map<long long, GFPoly>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    long long lambda_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
    long long x_degree() const;
    /// Coefficient of lambda^e (zero polynomial when absent).
    GFPoly lambda_coeff(long long e) const;

    BiPoly operator-() const;
    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend bool operator==(const BiPoly& a, const BiPoly& b) {
        return a.spec_ == b.spec_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    BiPoly pow(long long e) const;  // repeated multiplication, small e
    /// Raise to the p-th power: coefficients^p, both exponents times p.
    BiPoly pow_p() const;
    /// this^{p^l * s}: s small multiplications then l Frobenius rounds.
    BiPoly pow_decomposed(long long s, int l) const;

    /// Substitute lambda := v, leaving a polynomial in x.
    GFPoly substitute_lambda(const GFElem& v) const;
    /// Substitute x := a in F_q(t), leaving a polynomial in lambda over F_q(t).
    RFPoly substitute_x(const RatFunc& a) const;
    /// Full evaluation at (x0, lambda0) in F_q(t).
    RatFunc eval(const RatFunc& x0, const RatFunc& lambda0) const;
    /// Full evaluation at field points.
    GFElem eval(const GFElem& x0, const GFElem& lambda0) const;

    void set_term(long long lambda_deg, GFPoly coeff);

   private:
    const FieldSpec* spec_;
    std::map<long long, GFPoly> terms_;  // only nonzero coefficients
};

}  // namespace fqdyn
