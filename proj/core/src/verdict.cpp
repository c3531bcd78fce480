#include "fqdyn/verdict.hpp"

#include <sstream>

namespace fqdyn {

long long distinct_root_count(const RFPoly& P) {
    if (P.is_zero()) throw ZeroPolynomialError("distinct roots of the zero polynomial");
    if (P.degree() == 0) return 0;
    const long long p = P.lc().spec()->p;
    RFPoly d = P.derivative();
    if (d.is_zero()) {
        // all exponents divisible by p: P = Q(x^p) and x -> x^p is a
        // bijection on the closure, so Q has the same number of distinct roots
        auto Q = poly_undecimate(P, p);
        if (!Q) throw Error("derivative-zero polynomial with non-p exponents");
        return distinct_root_count(*Q);
    }
    RFPoly g = poly_gcd(P, d);
    if (g.degree() == 0) return P.degree();  // separable
    RFPoly w = poly_exact_div(P, g);
    // roots(P) = roots(w) union roots(g); subtract the overlap
    return distinct_root_count(w) + distinct_root_count(g) - distinct_root_count(poly_gcd(w, g));
}

RFPoly parameter_iterate_poly(const BinomialFamily& fam, const RatFunc& alpha, long long m) {
    BigInt cost = m >= 1 ? big_pow(BigInt(fam.d2), static_cast<unsigned long long>(m - 1)) : BigInt(1);
    if (cost > 10000) throw TooLargeError("parameter polynomial degree d2^{m-1} exceeds 10^4");
    const FieldSpec* spec = fam.spec;
    RFPoly F = RFPoly::constant(alpha);
    const RFPoly u = RFPoly::monomial(RatFunc::one(spec), 1);
    for (long long i = 0; i < m; ++i) {
        RFPoly t1 = poly_pow_p_iter(poly_pow(F, fam.s1), fam.p(), fam.l1)
                        .scaled(RatFunc::constant(fam.c1));
        RFPoly t2 = poly_pow_p_iter(poly_pow(F, fam.s2), fam.p(), fam.l2)
                        .scaled(RatFunc::constant(fam.c2));
        F = t1 + t2 + u;
    }
    return F;
}

std::vector<ParamPoly> param_preperiodicity_polys(
    const BinomialFamily& fam, const RatFunc& alpha,
    const std::vector<std::pair<long long, long long>>& pairs) {
    std::vector<ParamPoly> out;
    for (const auto& [m, n] : pairs) {
        if (!(m > n && n >= 0)) throw Error("pairs need m > n >= 0");
        RFPoly P = parameter_iterate_poly(fam, alpha, m) - parameter_iterate_poly(fam, alpha, n);
        long long count = distinct_root_count(P);
        out.push_back(ParamPoly{m, n, std::move(P), count});
    }
    return out;
}

std::string verdict_outcome_name(VerdictOutcome v) {
    switch (v) {
        case VerdictOutcome::InfiniteTrivial: return "infinite-trivial";
        case VerdictOutcome::InfiniteCollision: return "infinite-collision";
        case VerdictOutcome::InfiniteConstantShift: return "infinite-constant-shift";
        case VerdictOutcome::Finite: return "finite";
        case VerdictOutcome::EdgeUnknown: return "edge-unknown";
    }
    return "finite";
}

namespace {

void collect_evidence(const BinomialFamily& fam, const RatFunc& alpha, const RatFunc& beta,
                      const RatFunc& eps1, Verdict& v) {
    PlaceSetS S = exceptional_set(alpha, beta);
    if (S.empty()) {
        add_check(v.evidence, "exceptional_set_empty", true, "");
        return;
    }
    for (const auto& [place, cv] : S) {
        bool alpha_zero = alpha.is_zero(), beta_zero = beta.is_zero();
        Rational aa = alpha_zero ? Rational(0) : abs_log(alpha, place);
        Rational ab = beta_zero ? Rational(0) : abs_log(beta, place);
        add_check(v.evidence, "equal_abs@" + place.to_string(), aa == ab,
                  "|alpha| log " + aa.to_string() + ", |beta| log " + ab.to_string());
    }
    if (fam.rho && !eps1.is_zero()) {
        const Rational small_exp = Rational(1) - *fam.rho;
        const Rational low_exp =
            Rational(1) / Rational(fam.pl1()) - Rational(fam.s1) + Rational(1);
        for (const auto& [place, cv] : S) {
            Rational a = abs_log(eps1, place);
            bool ok = a == small_exp * cv || !(a > low_exp * cv);
            add_check(v.evidence, "eps1_size_trichotomy@" + place.to_string(), ok,
                      "|eps1| log " + a.to_string() + ", (1-rho)C log " + (small_exp * cv).to_string() +
                          ", low bound log " + (low_exp * cv).to_string());
        }
    }
}

}  // namespace

Verdict prep_verdict(const BinomialFamily& fam, const RatFunc& alpha, const RatFunc& beta) {
    if (alpha.spec() != fam.spec || beta.spec() != fam.spec)
        throw MixedFieldsError("points outside the family's field");
    Verdict v;
    v.eps1 = family_eval(fam, beta) - family_eval(fam, alpha);

    if (alpha.is_constant() && beta.is_constant()) {
        v.outcome = VerdictOutcome::InfiniteTrivial;
        v.reason = "alpha and beta are constants";
    } else if (v.eps1.is_zero()) {
        v.outcome = VerdictOutcome::InfiniteCollision;
        v.reason = "f(alpha) = f(beta)";
    } else {
        switch (fam.regime) {
            case Regime::Additive: {
                if ((beta - alpha).is_constant()) {
                    v.outcome = VerdictOutcome::InfiniteConstantShift;
                    v.reason = "additive family with constant beta - alpha";
                } else {
                    v.outcome = VerdictOutcome::Finite;
                    v.reason = "additive family with non-constant beta - alpha";
                }
                break;
            }
            case Regime::LeadDominant: {
                v.outcome = VerdictOutcome::Finite;
                v.reason = "lead-dominant regime with f(alpha) != f(beta) and non-constant pair";
                break;
            }
            case Regime::StrictLess: {
                v.outcome = VerdictOutcome::Finite;
                v.reason = "strict-less regime with f(alpha) != f(beta) and non-constant pair";
                break;
            }
            case Regime::Equal: {
                if (v.eps1.is_constant()) {
                    GFElem e1 = v.eps1.constant_value();
                    GFElem obstruction = fam.c1 * fam.spec->from_int(fam.s1) * gf_frobenius(e1, fam.l1) +
                                         fam.c2 * fam.spec->from_int(fam.s2) * gf_frobenius(e1, fam.l2);
                    if (obstruction.is_zero()) {
                        v.outcome = VerdictOutcome::EdgeUnknown;
                        v.reason = "equal regime: constant eps1 satisfies the obstruction equation";
                        v.edge_value = e1;
                    } else {
                        v.outcome = VerdictOutcome::Finite;
                        v.reason = "equal regime: constant eps1 violates the obstruction equation";
                    }
                } else {
                    v.outcome = VerdictOutcome::Finite;
                    v.reason = "equal regime: eps1 is not constant";
                }
                break;
            }
            case Regime::Quadratic: {
                // complete the square: with monic c2 = 1 (here c2 = c since
                // d2 - 1 = 1) the conjugated map is y -> y^2, for which only
                // constants or equal images give an infinite set; both were
                // ruled out above.
                v.outcome = VerdictOutcome::Finite;
                v.reason = "quadratic family reduced to the square map; images differ";
                RatFunc c2r = RatFunc::constant(fam.c2);
                GFElem half = fam.spec->from_int(2).inverse();
                RatFunc shift = RatFunc::constant(fam.c1 * half);
                RatFunc ap = c2r * alpha + shift, bp = c2r * beta + shift;
                add_check(v.evidence, "square_map_images_differ", ap * ap != bp * bp,
                          "alpha' = " + ap.to_string() + ", beta' = " + bp.to_string());
                break;
            }
            case Regime::Other: {
                v.outcome = VerdictOutcome::Finite;
                v.reason = "unclassified regime";
                break;
            }
        }
    }

    collect_evidence(fam, alpha, beta, v.eps1, v);

    bool infinite = v.outcome == VerdictOutcome::InfiniteTrivial ||
                    v.outcome == VerdictOutcome::InfiniteCollision ||
                    v.outcome == VerdictOutcome::InfiniteConstantShift;
    bool evidence_ok = all_pass(v.evidence);
    add_check(v.assertions, "evidence_consistent_with_outcome", !infinite || evidence_ok,
              infinite ? "infinite outcome requires every necessary condition to hold" : "");
    add_check(v.assertions, "edge_only_in_equal_regime",
              v.outcome != VerdictOutcome::EdgeUnknown || fam.regime == Regime::Equal, "");
    return v;
}

}  // namespace fqdyn
