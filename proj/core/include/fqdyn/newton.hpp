#pragma once

#include <map>
#include <optional>
#include <vector>

#include "fqdyn/check.hpp"
#include "fqdyn/family.hpp"
#include "fqdyn/places.hpp"

namespace fqdyn {

/// Lower convex hull of the points (i, ord_v(a_i)) of a polynomial
/// sum a_i x^i. A segment of slope s and length len certifies exactly len
/// roots of order -s in an algebraic closure of the completion at v, i.e.
/// log absolute value deg(v) * s. Slopes increase strictly left to right.
struct NewtonSegment {
    Rational slope;
    long long length;
};

struct NewtonPolygon {
    std::vector<std::pair<long long, std::optional<long long>>> points;  // (i, ord), nullopt for a_i = 0
    std::vector<NewtonSegment> segments;
    long long zero_root_multiplicity = 0;  // x-adic valuation of the polynomial
};

NewtonPolygon newton_polygon(const RFPoly& P, const Place& v);

/// Log absolute values of all nonzero roots of P in an algebraic closure of
/// the completion at v, as a sorted multiset. Roots at x = 0 are stripped.
/// The multiset sums to abs_log(trailing coefficient / leading coefficient).
std::vector<Rational> root_abs_multiset(const RFPoly& P, const Place& v);

/// The fiber through alpha: the set of points sharing alpha's image under f,
/// analyzed through the separable witness polynomial g2 and per-place root
/// sizes, without constructing any extension of F_q(t).
struct FiberData {
    BinomialFamily family;
    RatFunc alpha;
    RFPoly g2;        // g1(x) - g1(alpha) where f = g1^{p^{l1}}
    long long count;  // |{abar : f(abar) = f(alpha)}| = deg g2
    std::map<Place, std::vector<Rational>> per_place;  // sizes |abar - alpha|_v, abar != alpha
    AssertionTrace checks;
};

/// Requires alpha outside F_q and l2 > l1 (so rho is defined). Throws
/// NotSeparableError / RhoUndefinedError.
FiberData fiber_analyze(const BinomialFamily& fam, const RatFunc& alpha, const PlaceSetS& S);

}  // namespace fqdyn
