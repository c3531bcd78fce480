#include "fqdyn/newton.hpp"

#include <algorithm>
#include <sstream>

namespace fqdyn {

NewtonPolygon newton_polygon(const RFPoly& P, const Place& v) {
    if (P.is_zero()) throw ZeroPolynomialError("Newton polygon of the zero polynomial");
    if (P.degree() < 1) throw ZeroPolynomialError("Newton polygon needs degree >= 1");

    NewtonPolygon out;
    const auto& c = P.coeffs();
    long long i0 = -1;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) {
            out.points.emplace_back(static_cast<long long>(i), std::nullopt);
        } else {
            out.points.emplace_back(static_cast<long long>(i), ord_at(c[i], v));
            if (i0 < 0) i0 = static_cast<long long>(i);
        }
    }
    out.zero_root_multiplicity = i0;

    // lower hull of the finite points, monotone scan from i0 upward
    std::vector<std::pair<long long, long long>> hull;
    for (const auto& [i, o] : out.points) {
        if (!o) continue;
        std::pair<long long, long long> pt{i, *o};
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            // keep b only if slope(a,b) < slope(b,pt)
            BigInt lhs = BigInt(b.second - a.second) * (pt.first - b.first);
            BigInt rhs = BigInt(pt.second - b.second) * (b.first - a.first);
            if (lhs >= rhs)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }
    for (size_t j = 0; j + 1 < hull.size(); ++j) {
        const auto& a = hull[j];
        const auto& b = hull[j + 1];
        out.segments.push_back(
            NewtonSegment{Rational(BigInt(b.second - a.second), BigInt(b.first - a.first)), b.first - a.first});
    }
    return out;
}

std::vector<Rational> root_abs_multiset(const RFPoly& P, const Place& v) {
    NewtonPolygon np = newton_polygon(P, v);
    std::vector<Rational> out;
    for (const auto& seg : np.segments) {
        Rational val = Rational(v.deg()) * seg.slope;
        for (long long i = 0; i < seg.length; ++i) out.push_back(val);
    }
    std::sort(out.begin(), out.end());
    return out;
}

FiberData fiber_analyze(const BinomialFamily& fam, const RatFunc& alpha, const PlaceSetS& S) {
    if (fam.l2 <= fam.l1)
        throw RhoUndefinedError("rho undefined: degrees share the same p-adic part");
    if (alpha.spec() != fam.spec) throw MixedFieldsError("alpha outside the family's field");

    // g1 = c1^{1/p^{l1}} x^{s1} + c2^{1/p^{l1}} x^{p^{l2-l1} s2}, so that
    // f(x) = g1(x)^{p^{l1}}; the fiber of f through alpha is the root set of
    // g2 = g1 - g1(alpha).
    const GFElem a = gf_frobenius(fam.c1, -fam.l1);
    const GFElem b = gf_frobenius(fam.c2, -fam.l1);
    long long top = (fam.pl2() / fam.pl1()) * fam.s2;
    RFPoly g1 = RFPoly::monomial(RatFunc::constant(a), static_cast<size_t>(fam.s1)) +
                RFPoly::monomial(RatFunc::constant(b), static_cast<size_t>(top));
    RatFunc g1_alpha = g1.eval(alpha);
    RFPoly g2 = g1 - RFPoly::constant(g1_alpha);

    FiberData out{fam, alpha, g2, 0, {}, {}};
    RFPoly g = poly_gcd(g2, g2.derivative());
    bool separable = g.degree() == 0;
    add_check(out.checks, "g2_separable", separable,
              separable ? "" : "gcd(g2, g2') = " + rfpoly_expr_string(g, "x"));
    if (!separable)
        throw NotSeparableError("fiber witness polynomial is not separable; alpha must lie outside the constants");
    out.count = g2.degree();
    add_check(out.checks, "fiber_count", out.count == top,
              "count " + std::to_string(out.count) + " vs p^{l2-l1} s2 = " + std::to_string(top));

    const Rational rho = *fam.rho;
    const Rational one_minus_rho = Rational(1) - rho;

    // shift to measure |abar - alpha|: roots of g2(x + alpha) away from 0
    RFPoly shift = RFPoly::monomial(RatFunc::one(fam.spec), 1) + RFPoly::constant(alpha);
    RFPoly h = poly_compose(g2, shift);
    if (h.coeffs().empty() || !h.coeffs()[0].is_zero())
        throw Error("fiber shift lost the root at the base point");
    RFPoly h1(std::vector<RatFunc>(h.coeffs().begin() + 1, h.coeffs().end()));

    for (const auto& [v, cv] : S) {
        std::vector<Rational> sizes = root_abs_multiset(h1, v);
        out.per_place[v] = sizes;
        const Rational small = one_minus_rho * cv;
        bool members_ok = true;
        bool has_small = false;
        bool all_small = true;
        for (const auto& s : sizes) {
            if (s == small) {
                has_small = true;
            } else if (s == cv) {
                all_small = false;
            } else {
                members_ok = false;
            }
        }
        std::ostringstream detail;
        detail << "place " << v.to_string() << ", sizes {";
        for (size_t i = 0; i < sizes.size(); ++i) detail << (i ? ", " : "") << sizes[i].to_string();
        detail << "}, C_v log " << cv.to_string() << ", (1-rho) C_v log " << small.to_string();
        add_check(out.checks, "sizes_in_{C^(1-rho),C}@" + v.to_string(), members_ok, detail.str());
        add_check(out.checks, "has_size_C^(1-rho)@" + v.to_string(), has_small, detail.str());
        if (fam.s2 == 1)
            add_check(out.checks, "all_sizes_C^(1-rho)@" + v.to_string(), all_small, detail.str());
        add_check(out.checks, "size_count@" + v.to_string(),
                  static_cast<long long>(sizes.size()) == top - 1,
                  "expected " + std::to_string(top - 1) + " got " + std::to_string(sizes.size()));
    }
    return out;
}

}  // namespace fqdyn
