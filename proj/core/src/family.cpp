#include "fqdyn/family.hpp"

namespace fqdyn {

std::string regime_name(Regime r) {
    switch (r) {
        case Regime::LeadDominant: return "lead-dominant";
        case Regime::StrictLess: return "strict-less";
        case Regime::Equal: return "equal";
        case Regime::Additive: return "additive";
        case Regime::Quadratic: return "quadratic";
        case Regime::Other: return "other";
    }
    return "other";
}

namespace {
long long pow_ll(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}
}  // namespace

long long BinomialFamily::pl1() const { return pow_ll(p(), l1); }
long long BinomialFamily::pl2() const { return pow_ll(p(), l2); }

BinomialFamily family_new(const FieldSpec* spec, const GFElem& c1, const GFElem& c2, long long d1,
                          long long d2) {
    if (c1.spec() != spec || c2.spec() != spec)
        throw MixedFieldsError("family coefficients must live in the family's field");
    if (c1.is_zero() || c2.is_zero()) throw Error("family coefficients must be nonzero");
    if (!(1 <= d1 && d1 < d2)) throw BadDegreesError("need 1 <= d1 < d2");

    BinomialFamily fam;
    fam.spec = spec;
    fam.c1 = c1;
    fam.c2 = c2;
    fam.d1 = d1;
    fam.d2 = d2;
    const long long p = spec->p;
    auto decompose = [&](long long d, int& l, long long& s) {
        l = 0;
        s = d;
        while (s % p == 0) {
            s /= p;
            ++l;
        }
    };
    decompose(d1, fam.l1, fam.s1);
    decompose(d2, fam.l2, fam.s2);

    if (fam.l1 != fam.l2)
        fam.rho = Rational(BigInt(d2 - d1), BigInt(fam.pl2() - fam.pl1()));
    if (fam.s2 == 1 && fam.rho)
        fam.rho_prime = (Rational(1) - *fam.rho) / Rational(fam.pl1()) - Rational(fam.s1) + Rational(1);

    const long long w1 = fam.pl1() * (fam.s1 - 1);
    const long long w2 = fam.pl2() * (fam.s2 - 1);
    if (fam.s1 == 1 && fam.s2 == 1)
        fam.regime = Regime::Additive;
    else if (w2 > std::max<long long>(1, w1))
        fam.regime = Regime::LeadDominant;
    else if (fam.s1 == 1)
        fam.regime = Regime::Quadratic;  // forces d2 = 2, p > 2, d1 = 1
    else if (w2 < w1)
        fam.regime = Regime::StrictLess;
    else if (w2 == w1)
        fam.regime = Regime::Equal;
    else
        fam.regime = Regime::Other;
    return fam;
}

RatFunc family_eval(const BinomialFamily& fam, const RatFunc& z) {
    if (z.spec() != fam.spec) throw MixedFieldsError("family evaluated outside its coefficient field");
    // z^{d_i} = (z^{s_i})^{p^{l_i}}; the Frobenius part is coefficient-cheap.
    RatFunc t1 = rf_pow_p_iter(rf_pow(z, fam.s1), fam.l1);
    RatFunc t2 = rf_pow_p_iter(rf_pow(z, fam.s2), fam.l2);
    return RatFunc::constant(fam.c1) * t1 + RatFunc::constant(fam.c2) * t2;
}

GFElem family_eval(const BinomialFamily& fam, const GFElem& z) {
    return fam.c1 * gf_pow(z, fam.d1) + fam.c2 * gf_pow(z, fam.d2);
}

RFPoly family_rfpoly(const BinomialFamily& fam) {
    RFPoly r = RFPoly::monomial(RatFunc::constant(fam.c1), static_cast<size_t>(fam.d1));
    r += RFPoly::monomial(RatFunc::constant(fam.c2), static_cast<size_t>(fam.d2));
    return r;
}

MonicNormalization monic_normalize(const BinomialFamily& fam, const RatFunc& alpha,
                                   const RatFunc& beta) {
    MonicNormalization out{fam, alpha, beta, fam.spec->one()};
    if (fam.c2.is_one()) return out;
    auto [c, ext] = gf_nth_root(fam.c2, fam.d2 - 1);
    const Embedding& emb = get_embedding(fam.spec, ext);
    GFElem c1e = emb.map(fam.c1);
    // c^{1-d1} = inverse(c)^{d1-1}
    GFElem scale = gf_pow(c.inverse(), fam.d1 - 1);
    out.fam = family_new(ext, c1e * scale, ext->one(), fam.d1, fam.d2);
    RatFunc cr = RatFunc::constant(c);
    out.calpha = cr * rf_embed(alpha, emb);
    out.cbeta = cr * rf_embed(beta, emb);
    out.c = c;
    return out;
}

BinomialFamily family_embed(const BinomialFamily& fam, const FieldSpec* target) {
    if (target == fam.spec) return fam;
    const Embedding& emb = get_embedding(fam.spec, target);
    return family_new(target, emb.map(fam.c1), emb.map(fam.c2), fam.d1, fam.d2);
}

std::string family_to_string(const BinomialFamily& fam) {
    GFPoly f;
    f += GFPoly::monomial(fam.c1, static_cast<size_t>(fam.d1));
    f += GFPoly::monomial(fam.c2, static_cast<size_t>(fam.d2));
    return poly_expr_string(f, "x");
}

}  // namespace fqdyn
