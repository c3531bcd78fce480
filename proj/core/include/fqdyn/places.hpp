#pragma once

#include <limits>
#include <string>
#include <vector>

#include "fqdyn/rational.hpp"
#include "fqdyn/ratfunc.hpp"

namespace fqdyn {

/// A place of F_q(t): either a monic irreducible polynomial in t or the
/// degree place at infinity. Irreducibility is checked once at construction.
class Place {
   public:
    static Place infinity(const FieldSpec* spec);
    static Place finite(GFPoly pi);                 // monic irreducible
    static Place parse(std::string_view text, const FieldSpec* spec);  // "inf" or a polynomial in t

    bool is_infinity() const { return infinite_; }
    const GFPoly& pi() const { return pi_; }
    int deg() const { return deg_; }
    const FieldSpec* spec() const { return spec_; }

    std::string to_string() const;

    friend bool operator==(const Place& a, const Place& b) {
        return a.spec_ == b.spec_ && a.infinite_ == b.infinite_ && a.pi_ == b.pi_;
    }
    friend bool operator!=(const Place& a, const Place& b) { return !(a == b); }
    friend bool operator<(const Place& a, const Place& b);

   private:
    Place() : infinite_(false), deg_(0), spec_(nullptr) {}
    bool infinite_;
    GFPoly pi_;
    int deg_;
    const FieldSpec* spec_;
};

/// Logarithmic absolute value in base q: |x|_v = q^value. Integral for
/// elements of F_q(t); fractional values only arise as certified root sizes.
using AbsLog = Rational;

constexpr long long kOrdInfinity = std::numeric_limits<long long>::max();

/// Order of vanishing at v; kOrdInfinity for x = 0.
long long ord_at(const RatFunc& x, const Place& v);

/// value with |x|_v = q^value, i.e. -deg(v) * ord_v(x). Throws ZeroInputError.
AbsLog abs_log(const RatFunc& x, const Place& v);

/// All places with nonzero order, with their orders.
std::vector<std::pair<Place, long long>> support(const RatFunc& x, std::uint64_t seed = 0);

/// Sum of deg(v) * ord_v(x) over the support; the product formula says this
/// is always 0 and callers assert it.
Rational product_formula_check(const RatFunc& x, std::uint64_t seed = 0);

struct PlaceCv {
    Place place;
    AbsLog cv;  // max(|alpha|_v, |beta|_v) in log units, > 0
};
using PlaceSetS = std::vector<PlaceCv>;

/// The finite set of places where max(|alpha|_v, |beta|_v) > 1.
PlaceSetS exceptional_set(const RatFunc& alpha, const RatFunc& beta, std::uint64_t seed = 0);

/// Weil height in log_q units: sum of max(0, abs_log) over all places, which
/// equals max(deg num, deg den); h(0) = 0.
Rational weil_height(const RatFunc& x);

}  // namespace fqdyn
