#pragma once

#include <optional>
#include <string>

#include "fqdyn/poly.hpp"

namespace fqdyn {

/// Element of F_q(t) in canonical form: gcd(num, den) = 1, den monic and
/// nonzero, zero is 0/1. The field spec is carried explicitly so the zero
/// element still knows its coefficient field.
class RatFunc {
   public:
    RatFunc() : spec_(nullptr) {}
    static RatFunc zero(const FieldSpec* spec);
    static RatFunc one(const FieldSpec* spec);
    static RatFunc constant(const GFElem& c);
    static RatFunc from_int(const FieldSpec* spec, long long n);
    static RatFunc t(const FieldSpec* spec);  // the generator of F_q(t)
    static RatFunc from_poly(const FieldSpec* spec, GFPoly num);
    static RatFunc from_ratio(const FieldSpec* spec, GFPoly num, GFPoly den);

    const FieldSpec* spec() const { return spec_; }
    const GFPoly& num() const { return num_; }
    const GFPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    /// True when the value lies in F_q.
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    GFElem constant_value() const;  // requires is_constant()

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.spec_ == b.spec_ && a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
    friend bool operator<(const RatFunc& a, const RatFunc& b);  // container order

    RatFunc inverse() const;

    /// Grammar-compatible text form, e.g. "2*t^5 + t^6" or "(t^2+1)/(t+2)".
    std::string to_string() const;

   private:
    RatFunc(const FieldSpec* spec, GFPoly num, GFPoly den)
        : spec_(spec), num_(std::move(num)), den_(std::move(den)) {}
    void reduce();

    const FieldSpec* spec_;
    GFPoly num_;
    GFPoly den_;
};

/// x^e for any integer e (negative allowed for nonzero x).
RatFunc rf_pow(const RatFunc& x, long long e);

/// x^{p^l}; cheap coefficient-wise Frobenius power.
RatFunc rf_pow_p_iter(const RatFunc& x, int l);

/// The p-th root when x is a p-th power in F_q(t), otherwise nullopt.
std::optional<RatFunc> rf_pth_root(const RatFunc& x);

/// Map a rational function into a larger coefficient field.
RatFunc rf_embed(const RatFunc& x, const Embedding& emb);

/// Hooks so Polynomial<RatFunc> works.
inline RatFunc zero_like(const RatFunc& x) { return RatFunc::zero(x.spec()); }
inline RatFunc one_like(const RatFunc& x) { return RatFunc::one(x.spec()); }
inline RatFunc coeff_pow_p(const RatFunc& x, long long p) {
    (void)p;
    return rf_pow_p_iter(x, 1);
}
inline std::optional<RatFunc> coeff_pth_root(const RatFunc& x) { return rf_pth_root(x); }

using RFPoly = Polynomial<RatFunc>;

/// Grammar-compatible printers shared by reports and error messages.
std::string gf_expr_string(const GFElem& c);               // "2" or "2*w + 1"
std::string poly_expr_string(const GFPoly& f, const std::string& var);
std::string rfpoly_expr_string(const RFPoly& f, const std::string& var);

}  // namespace fqdyn
