#include "fqdyn/ratfunc.hpp"

#include <sstream>

namespace fqdyn {

RatFunc RatFunc::zero(const FieldSpec* spec) {
    return RatFunc(spec, GFPoly(), GFPoly::constant(spec->one()));
}

RatFunc RatFunc::one(const FieldSpec* spec) {
    return RatFunc(spec, GFPoly::constant(spec->one()), GFPoly::constant(spec->one()));
}

RatFunc RatFunc::constant(const GFElem& c) {
    return RatFunc(c.spec(), GFPoly::constant(c), GFPoly::constant(c.spec()->one()));
}

RatFunc RatFunc::from_int(const FieldSpec* spec, long long n) {
    return constant(spec->from_int(n));
}

RatFunc RatFunc::t(const FieldSpec* spec) {
    return RatFunc(spec, GFPoly::monomial(spec->one(), 1), GFPoly::constant(spec->one()));
}

RatFunc RatFunc::from_poly(const FieldSpec* spec, GFPoly num) {
    return RatFunc(spec, std::move(num), GFPoly::constant(spec->one()));
}

RatFunc RatFunc::from_ratio(const FieldSpec* spec, GFPoly num, GFPoly den) {
    if (den.is_zero()) throw DivisionByZeroError("rational function with zero denominator");
    RatFunc r(spec, std::move(num), std::move(den));
    r.reduce();
    return r;
}

GFElem RatFunc::constant_value() const {
    if (!is_constant()) throw Error("constant_value on a non-constant rational function");
    return num_.is_zero() ? spec_->zero() : num_.coeffs()[0];
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = GFPoly::constant(spec_->one());
        return;
    }
    if (!den_.is_one()) {
        GFPoly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = poly_exact_div(num_, g);
            den_ = poly_exact_div(den_, g);
        }
        if (!den_.is_monic()) {
            GFElem inv = den_.lc().inverse();
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }
}

namespace {
void require_same(const RatFunc& a, const RatFunc& b) {
    if (a.spec() != b.spec()) throw MixedFieldsError("rational functions over distinct coefficient fields");
}
}  // namespace

RatFunc RatFunc::operator-() const { return RatFunc(spec_, -num_, den_); }

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    require_same(*this, o);
    if (den_.is_one() && o.den_.is_one()) {
        num_ += o.num_;
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    require_same(*this, o);
    num_ *= o.num_;
    if (!(den_.is_one() && o.den_.is_one())) {
        den_ *= o.den_;
        reduce();
    } else if (num_.is_zero()) {
        den_ = GFPoly::constant(spec_->one());
    }
    return *this;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of the zero rational function");
    RatFunc r(spec_, den_, num_);
    if (!r.den_.is_monic()) {
        GFElem inv = r.den_.lc().inverse();
        r.num_ = r.num_.scaled(inv);
        r.den_ = r.den_.scaled(inv);
    }
    return r;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    require_same(*this, o);
    return *this *= o.inverse();
}

bool operator<(const RatFunc& a, const RatFunc& b) {
    if (a.spec() != b.spec()) return a.spec() < b.spec();
    if (a.num() != b.num()) return a.num() < b.num();
    return a.den() < b.den();
}

RatFunc rf_pow(const RatFunc& x, long long e) {
    if (e == 0) return RatFunc::one(x.spec());
    if (e < 0) return rf_pow(x.inverse(), -e);
    RatFunc r = RatFunc::one(x.spec());
    RatFunc base = x;
    long long m = e;
    while (m > 0) {
        if (m & 1) r *= base;
        base *= base;
        m >>= 1;
    }
    return r;
}

RatFunc rf_pow_p_iter(const RatFunc& x, int l) {
    if (x.is_zero() || l == 0) return x;
    const long long p = x.spec()->p;
    GFPoly n = x.num(), d = x.den();
    for (int i = 0; i < l; ++i) {
        n = poly_pow_p(n, p);
        d = poly_pow_p(d, p);
    }
    return RatFunc::from_ratio(x.spec(), std::move(n), std::move(d));
}

std::optional<RatFunc> rf_pth_root(const RatFunc& x) {
    if (x.is_zero()) return x;
    const long long p = x.spec()->p;
    auto n = poly_pth_root(x.num(), p);
    auto d = poly_pth_root(x.den(), p);
    if (!n || !d) return std::nullopt;
    return RatFunc::from_ratio(x.spec(), std::move(*n), std::move(*d));
}

RatFunc rf_embed(const RatFunc& x, const Embedding& emb) {
    auto map_poly = [&](const GFPoly& f) {
        std::vector<GFElem> c;
        c.reserve(f.coeffs().size());
        for (const auto& e : f.coeffs()) c.push_back(emb.map(e));
        return GFPoly(std::move(c));
    };
    return RatFunc::from_ratio(emb.dst, map_poly(x.num()), map_poly(x.den()));
}

// ---------------------------------------------------------------------------
// Printing (kept parseable by the expression grammar)
// ---------------------------------------------------------------------------

std::string gf_expr_string(const GFElem& c) {
    if (c.in_prime_field()) return std::to_string(c.coeffs().empty() ? 0 : c.coeffs()[0]);
    std::ostringstream os;
    bool first = true;
    for (int i = c.spec()->k - 1; i >= 0; --i) {
        long long v = c.coeffs()[static_cast<size_t>(i)];
        if (v == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << v;
        } else {
            if (v != 1) os << v << '*';
            os << 'w';
            if (i > 1) os << '^' << i;
        }
    }
    if (first) os << '0';
    return os.str();
}

namespace {

bool needs_parens(const std::string& s) { return s.find_first_of("+-") != std::string::npos; }

std::string wrap(const std::string& s) { return needs_parens(s) ? "(" + s + ")" : s; }

template <class Coeff, class Printer>
std::string poly_string_impl(const std::vector<Coeff>& coeffs, const std::string& var, Printer print,
                             const char* zero_text) {
    if (coeffs.empty()) return zero_text;
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        std::string cs = print(coeffs[i]);
        if (i == 0) {
            os << wrap(cs);
        } else {
            if (!coeffs[i].is_one()) os << wrap(cs) << '*';
            os << var;
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

}  // namespace

std::string poly_expr_string(const GFPoly& f, const std::string& var) {
    return poly_string_impl(f.coeffs(), var, [](const GFElem& c) { return gf_expr_string(c); }, "0");
}

std::string rfpoly_expr_string(const RFPoly& f, const std::string& var) {
    return poly_string_impl(f.coeffs(), var, [](const RatFunc& c) { return c.to_string(); }, "0");
}

std::string RatFunc::to_string() const {
    if (is_zero()) return "0";
    std::string ns = poly_expr_string(num_, "t");
    if (den_.is_one()) return ns;
    std::string ds = poly_expr_string(den_, "t");
    auto paren = [](const std::string& s) {
        return s.find_first_of("+-*/^") != std::string::npos ? "(" + s + ")" : s;
    };
    return paren(ns) + "/" + paren(ds);
}

}  // namespace fqdyn
