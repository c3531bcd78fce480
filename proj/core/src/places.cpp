#include "fqdyn/places.hpp"

#include <algorithm>
#include <map>

#include "fqdyn/factor.hpp"

namespace fqdyn {

Place Place::infinity(const FieldSpec* spec) {
    Place v;
    v.infinite_ = true;
    v.deg_ = 1;
    v.spec_ = spec;
    return v;
}

Place Place::finite(GFPoly pi) {
    if (pi.degree() < 1) throw Error("finite place needs a nonconstant polynomial");
    if (!pi.is_monic()) throw Error("finite place polynomial must be monic");
    if (!poly_is_irreducible(pi)) throw Error("finite place polynomial must be irreducible");
    Place v;
    v.infinite_ = false;
    v.deg_ = pi.degree();
    v.spec_ = pi.lc().spec();
    v.pi_ = std::move(pi);
    return v;
}

std::string Place::to_string() const {
    if (infinite_) return "inf";
    return poly_expr_string(pi_, "t");
}

bool operator<(const Place& a, const Place& b) {
    if (a.spec_ != b.spec_) return a.spec_ < b.spec_;
    if (a.infinite_ != b.infinite_) return a.infinite_ < b.infinite_;
    return a.pi_ < b.pi_;
}

long long ord_at(const RatFunc& x, const Place& v) {
    if (x.is_zero()) return kOrdInfinity;
    if (v.is_infinity()) return x.den().degree() - x.num().degree();
    auto mult = [&](const GFPoly& f) {
        long long m = 0;
        GFPoly g = f;
        while (true) {
            auto [q, r] = poly_divrem(g, v.pi());
            if (!r.is_zero()) break;
            ++m;
            g = std::move(q);
        }
        return m;
    };
    return mult(x.num()) - mult(x.den());
}

AbsLog abs_log(const RatFunc& x, const Place& v) {
    if (x.is_zero()) throw ZeroInputError("absolute value of zero");
    return Rational(-v.deg() * ord_at(x, v));
}

std::vector<std::pair<Place, long long>> support(const RatFunc& x, std::uint64_t seed) {
    if (x.is_zero()) throw ZeroInputError("support of zero");
    std::map<Place, long long> ords;
    Rng rng(seed);
    if (x.num().degree() > 0)
        for (const auto& [pi, m] : poly_factor(x.num(), rng).factors) ords[Place::finite(pi)] += m;
    if (x.den().degree() > 0)
        for (const auto& [pi, m] : poly_factor(x.den(), rng).factors) ords[Place::finite(pi)] -= m;
    long long at_inf = x.den().degree() - x.num().degree();
    if (at_inf != 0) ords[Place::infinity(x.spec())] = at_inf;
    std::vector<std::pair<Place, long long>> out;
    for (auto& [v, m] : ords)
        if (m != 0) out.emplace_back(v, m);
    return out;
}

Rational product_formula_check(const RatFunc& x, std::uint64_t seed) {
    Rational sum = 0;
    for (const auto& [v, m] : support(x, seed)) sum += Rational(static_cast<long long>(v.deg()) * m);
    return sum;
}

PlaceSetS exceptional_set(const RatFunc& alpha, const RatFunc& beta, std::uint64_t seed) {
    std::map<Place, Rational> cv;
    auto scan = [&](const RatFunc& x) {
        if (x.is_zero()) return;
        for (const auto& [v, m] : support(x, seed)) {
            Rational a(-static_cast<long long>(v.deg()) * m);
            if (a > Rational(0)) {
                auto it = cv.find(v);
                if (it == cv.end() || it->second < a) cv[v] = a;
            }
        }
    };
    scan(alpha);
    scan(beta);
    PlaceSetS out;
    for (auto& [v, c] : cv) out.push_back(PlaceCv{v, c});
    return out;
}

Rational weil_height(const RatFunc& x) {
    if (x.is_zero()) return Rational(0);
    return Rational(std::max(x.num().degree(), x.den().degree()));
}

}  // namespace fqdyn
