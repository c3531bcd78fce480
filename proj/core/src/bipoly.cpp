#include "fqdyn/bipoly.hpp"

namespace fqdyn {

BiPoly BiPoly::constant(const FieldSpec* spec, const GFElem& c) {
    BiPoly r(spec);
    if (!c.is_zero()) r.terms_.emplace(0, GFPoly::constant(c));
    return r;
}

BiPoly BiPoly::x_poly(const FieldSpec* spec, GFPoly f) {
    BiPoly r(spec);
    if (!f.is_zero()) r.terms_.emplace(0, std::move(f));
    return r;
}

BiPoly BiPoly::lambda(const FieldSpec* spec) {
    BiPoly r(spec);
    r.terms_.emplace(1, GFPoly::constant(spec->one()));
    return r;
}

long long BiPoly::x_degree() const {
    long long d = -1;
    for (const auto& [e, c] : terms_) d = std::max<long long>(d, c.degree());
    return d;
}

GFPoly BiPoly::lambda_coeff(long long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GFPoly() : it->second;
}

void BiPoly::set_term(long long lambda_deg, GFPoly coeff) {
    if (coeff.is_zero())
        terms_.erase(lambda_deg);
    else
        terms_[lambda_deg] = std::move(coeff);
}

BiPoly BiPoly::operator-() const {
    BiPoly r(spec_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    if (a.spec_ != b.spec_) throw MixedFieldsError("bivariate polynomials over distinct fields");
    BiPoly r = a;
    for (const auto& [e, c] : b.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
            r.terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.spec_ != b.spec_) throw MixedFieldsError("bivariate polynomials over distinct fields");
    BiPoly r(a.spec_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            GFPoly prod = ca * cb;
            auto it = r.terms_.find(ea + eb);
            if (it == r.terms_.end()) {
                r.terms_.emplace(ea + eb, std::move(prod));
            } else {
                it->second += prod;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

BiPoly BiPoly::pow(long long e) const {
    if (e < 0) throw Error("negative exponent for bivariate power");
    BiPoly r = BiPoly::constant(spec_, spec_->one());
    BiPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

BiPoly BiPoly::pow_p() const {
    const long long p = spec_->p;
    BiPoly r(spec_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e * p, poly_pow_p(c, p));
    return r;
}

BiPoly BiPoly::pow_decomposed(long long s, int l) const {
    BiPoly r = pow(s);
    for (int i = 0; i < l; ++i) r = r.pow_p();
    return r;
}

GFPoly BiPoly::substitute_lambda(const GFElem& v) const {
    GFPoly acc;
    for (const auto& [e, c] : terms_) acc += c.scaled(gf_pow(v, e));
    return acc;
}

RFPoly BiPoly::substitute_x(const RatFunc& a) const {
    if (is_zero()) return RFPoly();
    std::vector<RatFunc> coeffs(static_cast<size_t>(lambda_degree()) + 1, RatFunc::zero(spec_));
    for (const auto& [e, c] : terms_) {
        RatFunc acc = RatFunc::zero(spec_);
        for (size_t i = c.coeffs().size(); i-- > 0;)
            acc = acc * a + RatFunc::constant(c.coeffs()[i]);
        coeffs[static_cast<size_t>(e)] = std::move(acc);
    }
    return RFPoly(std::move(coeffs));
}

RatFunc BiPoly::eval(const RatFunc& x0, const RatFunc& lambda0) const {
    RatFunc acc = RatFunc::zero(spec_);
    for (const auto& [e, c] : terms_) {
        RatFunc xv = RatFunc::zero(spec_);
        for (size_t i = c.coeffs().size(); i-- > 0;)
            xv = xv * x0 + RatFunc::constant(c.coeffs()[i]);
        acc += xv * rf_pow(lambda0, e);
    }
    return acc;
}

GFElem BiPoly::eval(const GFElem& x0, const GFElem& lambda0) const {
    GFElem acc = spec_->zero();
    for (const auto& [e, c] : terms_) {
        GFElem xv = c.eval(x0);
        acc += xv * gf_pow(lambda0, e);
    }
    return acc;
}

}  // namespace fqdyn
