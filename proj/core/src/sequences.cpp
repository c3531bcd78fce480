#include "fqdyn/sequences.hpp"

#include <sstream>

#include "fqdyn/orbits.hpp"

namespace fqdyn {

namespace {

// eps-style recursion seeded at `first` around the base point `base`:
// u_0 = first, u_{n+1} = f(u_n + base) - f(base).
std::vector<RatFunc> difference_orbit(const BinomialFamily& fam, const RatFunc& first,
                                      const RatFunc& base, int N) {
    std::vector<RatFunc> out;
    out.reserve(static_cast<size_t>(N) + 1);
    out.push_back(first);
    const RatFunc fbase = family_eval(fam, base);
    for (int n = 0; n < N; ++n) out.push_back(family_eval(fam, out.back() + base) - fbase);
    return out;
}

std::vector<RatFunc> subtract_first(const std::vector<RatFunc>& seq) {
    std::vector<RatFunc> out;
    out.reserve(seq.size());
    for (const auto& v : seq) out.push_back(v - seq[0]);
    return out;
}

GFElem binom_mod(const FieldSpec* spec, long long n, long long j) {
    BigInt num = 1, den = 1;
    for (long long i = 0; i < j; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    BigInt b = num / den;
    return spec->from_int(static_cast<long long>(b % spec->p));
}

}  // namespace

EpsSequences eps_sequences(const BinomialFamily& fam, const RatFunc& alpha, const RatFunc& beta,
                           int N, const std::optional<RatFunc>& abar) {
    if (alpha.spec() != fam.spec || beta.spec() != fam.spec)
        throw MixedFieldsError("base points outside the family's field");
    EpsSequences out;
    out.eps = difference_orbit(fam, beta - alpha, alpha, N);
    out.eps_prime = subtract_first(out.eps);
    out.delta = difference_orbit(fam, alpha - beta, beta, N);
    out.delta_prime = subtract_first(out.delta);
    out.lambda_alpha = alpha - family_eval(fam, alpha);
    if (abar) {
        if (family_eval(fam, *abar) != family_eval(fam, alpha))
            throw NotInFiberError("abar is not in the fiber: f(abar) != f(alpha)");
        out.eps_bar = difference_orbit(fam, beta - *abar, *abar, N);
        out.eps_bar_prime = subtract_first(*out.eps_bar);
        out.delta_bar = difference_orbit(fam, *abar - beta, beta, N);
        out.lambda_abar = *abar - family_eval(fam, *abar);
    }
    return out;
}

AssertionTrace additive_identity_check(const BinomialFamily& fam, const RatFunc& alpha,
                                       const RatFunc& beta, const RatFunc& lambda, int N,
                                       long long max_steps) {
    if (fam.regime != Regime::Additive)
        throw NotAdditiveError("family is not additive (need s1 = s2 = 1)");
    AssertionTrace trace;
    RatFunc fa = alpha, fb = beta, d = beta - alpha;
    for (int n = 1; n <= N; ++n) {
        fa = family_eval(fam, fa) + lambda;
        fb = family_eval(fam, fb) + lambda;
        d = family_eval(fam, d);  // f^n(beta - alpha), no parameter
        bool ok = fb - fa == d;
        add_check(trace, "additive_difference_n" + std::to_string(n), ok,
                  ok ? "" : "lhs " + (fb - fa).to_string() + " rhs " + d.to_string());
    }

    // preperiodicity transfer when beta - alpha is constant
    RatFunc u = beta - alpha;
    if (!u.is_constant()) {
        add_check(trace, "transfer_skipped_nonconstant_shift", true, (beta - alpha).to_string());
        return trace;
    }
    OrbitReport rep = preperiodic(fam, lambda, alpha, max_steps);
    if (rep.status != OrbitReport::Status::Preperiodic) {
        add_check(trace, "transfer_skipped_alpha_not_preperiodic", true, "");
        return trace;
    }
    const long long k = rep.tail, l = rep.period;
    const long long q = fam.spec->q;
    // constants iterate inside F_q, so two of the q+1 values below coincide
    std::map<RatFunc, long long> seen;
    long long r1 = -1, r2 = -1;
    RatFunc w = u;
    for (long long j = 0; j < k; ++j) w = family_eval(fam, w);
    for (long long r = 0; r <= q; ++r) {
        auto [it, fresh] = seen.emplace(w, r);
        if (!fresh) {
            r1 = it->second;
            r2 = r;
            break;
        }
        for (long long j = 0; j < l; ++j) w = family_eval(fam, w);
    }
    bool found = r1 >= 0;
    add_check(trace, "transfer_constant_pair_found", found,
              found ? "r1 = " + std::to_string(r1) + ", r2 = " + std::to_string(r2) : "");
    if (found) {
        RatFunc b1 = iterate(fam, lambda, beta, k + r1 * l);
        RatFunc b2 = iterate(fam, lambda, beta, k + r2 * l);
        bool ok = b1 == b2;
        add_check(trace, "transfer_beta_orbit_repeats", ok,
                  "f_lambda^" + std::to_string(k + r1 * l) + "(beta) vs f_lambda^" +
                      std::to_string(k + r2 * l) + "(beta)");
    }
    return trace;
}

SumIdentityResult pair_sum_identity(const BinomialFamily& fam, const RatFunc& alpha,
                                    const RatFunc& beta) {
    if (!(fam.s1 == 2 && fam.s2 == 1))
        throw WrongShapeError("identity needs (s1, s2) = (2, 1)");
    EpsSequences seq = eps_sequences(fam, alpha, beta, 2);
    SumIdentityResult out{RatFunc::zero(fam.spec), RatFunc::zero(fam.spec), {}};
    out.lhs = seq.eps[2] + seq.delta[2];
    RatFunc prod = RatFunc::from_int(fam.spec, 2) * seq.eps[1] * seq.eps_prime[1];
    out.rhs = RatFunc::constant(fam.c1) * rf_pow_p_iter(prod, fam.l1);
    bool ok = out.lhs == out.rhs;
    add_check(out.trace, "pair_sum_identity", ok,
              "lhs " + out.lhs.to_string() + ", rhs " + out.rhs.to_string());
    return out;
}

ShiftIdentityResult fiber_shift_identity(const BinomialFamily& fam, const RatFunc& alpha,
                                         const RatFunc& eps1) {
    const FieldSpec* spec = fam.spec;
    const RFPoly X = RFPoly::monomial(RatFunc::one(spec), 1);
    const RFPoly f = family_rfpoly(fam);

    RFPoly lhs = poly_compose(f, X + RFPoly::constant(eps1)) - f;
    RatFunc shift_at_alpha = family_eval(fam, eps1 + alpha) - family_eval(fam, alpha);
    lhs -= RFPoly::constant(shift_at_alpha);

    auto bracket = [&](long long s) {
        RFPoly acc;
        for (long long j = 1; j <= s - 1; ++j) {
            GFElem b = binom_mod(spec, s, j);
            if (b.is_zero()) continue;
            RatFunc coeff = RatFunc::constant(b) * rf_pow(eps1, s - j);
            RFPoly term = RFPoly::monomial(RatFunc::one(spec), static_cast<size_t>(j)) -
                          RFPoly::constant(rf_pow(alpha, j));
            acc += term.scaled(coeff);
        }
        return acc;
    };
    RFPoly rhs = poly_pow_p_iter(bracket(fam.s1), fam.p(), fam.l1).scaled(RatFunc::constant(fam.c1)) +
                 poly_pow_p_iter(bracket(fam.s2), fam.p(), fam.l2).scaled(RatFunc::constant(fam.c2));

    ShiftIdentityResult out{lhs, rhs, {}};
    add_check(out.trace, "fiber_shift_identity", lhs == rhs,
              "degree lhs " + std::to_string(lhs.degree()) + ", rhs " + std::to_string(rhs.degree()));
    RatFunc at_alpha = lhs.eval(alpha);
    add_check(out.trace, "vanishes_at_alpha", at_alpha.is_zero(), at_alpha.to_string());
    return out;
}

TowerResult divided_difference_tower(const BinomialFamily& fam, const RatFunc& alpha,
                                     const RatFunc& eps1, const std::vector<RatFunc>& fiber_points) {
    if (fam.l2 <= fam.l1) throw RhoUndefinedError("tower needs l2 > l1");
    const FieldSpec* spec = fam.spec;
    TowerResult out;
    if (eps1.is_zero()) {
        out.eps1_zero = true;
        add_check(out.trace, "eps1_zero_tower_trivial", true, "g1 = 0, degree claims skipped");
        return out;
    }

    const RFPoly X = RFPoly::monomial(RatFunc::one(spec), 1);
    const RFPoly f = family_rfpoly(fam);
    RFPoly N = poly_compose(f, X + RFPoly::constant(eps1)) - f;
    N -= RFPoly::constant(family_eval(fam, eps1 + alpha) - family_eval(fam, alpha));

    RFPoly M = N;
    for (int i = 0; i < fam.l1; ++i) {
        auto root = poly_pth_root(M, fam.p());
        if (!root) throw InexactDivisionError("numerator is not a p-th power; not a fiber configuration");
        M = *root;
    }
    out.lead_numerator = M.is_zero() ? RatFunc::zero(spec) : M.lc();

    RFPoly denom = X - RFPoly::constant(alpha);
    auto [g1, rem] = poly_divrem(M, denom);
    if (!rem.is_zero())
        throw InexactDivisionError("difference does not vanish at the base point; non-fiber input");

    const long long r = fam.pl2() / fam.pl1();
    out.tower.push_back(g1);
    out.degrees.push_back(g1.degree());
    for (long long i = 1; i < r; ++i) {
        RatFunc w = static_cast<size_t>(i) <= fiber_points.size()
                        ? fiber_points[static_cast<size_t>(i) - 1]
                        : RatFunc::from_int(spec, i);
        const RFPoly& g = out.tower.back();
        RFPoly numer = g - RFPoly::constant(g.eval(w));
        auto [gn, rem2] = poly_divrem(numer, X - RFPoly::constant(w));
        if (!rem2.is_zero()) throw InexactDivisionError("divided difference failed to divide exactly");
        out.tower.push_back(gn);
        out.degrees.push_back(gn.degree());
    }

    const bool claims = fam.regime == Regime::StrictLess && fam.s2 > 1;
    if (claims) {
        add_check(out.trace, "deg_g1", out.degrees.front() == fam.s1 - 2,
                  "deg g1 = " + std::to_string(out.degrees.front()) + ", s1 - 2 = " +
                      std::to_string(fam.s1 - 2));
        long long want = (fam.s1 - 1) - r;
        add_check(out.trace, "deg_gr", out.degrees.back() == want && want > 0,
                  "deg g_r = " + std::to_string(out.degrees.back()) + ", (s1-1)-r = " +
                      std::to_string(want));
        GFElem lead = gf_frobenius(fam.c1, -fam.l1) * spec->from_int(fam.s1);
        RatFunc want_lead = RatFunc::constant(lead) * eps1;
        add_check(out.trace, "lead_of_numerator", out.lead_numerator == want_lead,
                  "got " + out.lead_numerator->to_string() + ", want " + want_lead.to_string());
    }
    for (const auto& w : fiber_points) out.values.push_back(out.tower.back().eval(w));
    return out;
}

ObstructionResult rho1_obstruction(const BinomialFamily& fam) {
    if (fam.regime != Regime::Equal)
        throw WrongRegimeError("obstruction applies to the equal regime only");
    const FieldSpec* spec = fam.spec;
    GFElem target = -(fam.c1 * spec->from_int(fam.s1)) / (fam.c2 * spec->from_int(fam.s2));
    // eps^{p^{l2} - p^{l1}} = target reduces through the p^{l1}-th root to
    // eps^{e} = target^{1/p^{l1}} with e = p^{l2-l1} - 1 prime to p.
    const long long e = fam.pl2() / fam.pl1() - 1;
    GFElem tprime = gf_frobenius(target, -fam.l1);

    ObstructionResult out{target, spec, {}};
    for (int m = 1;; ++m) {
        BigInt qm = big_pow(BigInt(spec->q), static_cast<unsigned long long>(m));
        if (qm > (1LL << 22)) throw TooLargeError("obstruction root search exceeded field size budget");
        BigInt order = qm - 1;
        if (order % e != 0) continue;
        const FieldSpec* ext = spec->extension(m);
        const Embedding& emb = get_embedding(spec, ext);
        GFElem te = emb.map(tprime);
        if (!gf_pow(te, order / e).is_one()) continue;
        out.field = ext;
        out.admissible.push_back(ext->zero());
        for (long long idx = 1; idx < ext->q; ++idx) {
            GFElem z = ext->element_from_index(idx);
            if (gf_pow(z, e) == te) out.admissible.push_back(z);
        }
        std::sort(out.admissible.begin(), out.admissible.end());
        return out;
    }
}

}  // namespace fqdyn
