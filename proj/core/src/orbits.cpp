#include "fqdyn/orbits.hpp"

#include <sstream>

namespace fqdyn {

RatFunc iterate(const BinomialFamily& fam, const RatFunc& lambda, const RatFunc& x, long long n) {
    if (n < 0) throw Error("iterate needs n >= 0");
    RatFunc z = x;
    for (long long i = 0; i < n; ++i) z = family_eval(fam, z) + lambda;
    return z;
}

Rational escape_radius(const BinomialFamily& fam, const RatFunc& lambda, const Place& v) {
    Rational r(0);
    // c1 is a constant of F_q, so its term is always 0; kept for shape.
    Rational c1_term = Rational(0) / Rational(fam.d2 - fam.d1);
    r = Rational::max(r, c1_term);
    if (!lambda.is_zero()) r = Rational::max(r, abs_log(lambda, v) / Rational(fam.d2));
    return r;
}

namespace {

// Places that can ever see a log absolute value > 0 along an orbit:
// supp(lambda) and supp(x). Everywhere else both stay integral.
std::vector<Place> tracked_places(const RatFunc& lambda, const RatFunc& x) {
    std::map<Place, bool> seen;
    if (!lambda.is_zero())
        for (const auto& [v, m] : support(lambda)) seen.emplace(v, true);
    if (!x.is_zero())
        for (const auto& [v, m] : support(x)) seen.emplace(v, true);
    std::vector<Place> out;
    for (auto& [v, b] : seen) out.push_back(v);
    return out;
}

}  // namespace

OrbitReport preperiodic(const BinomialFamily& fam, const RatFunc& lambda, const RatFunc& x,
                        long long max_steps) {
    if (max_steps < 1) throw Error("preperiodic needs max_steps >= 1");
    OrbitReport out;
    out.steps_used = max_steps;

    std::vector<Place> places = tracked_places(lambda, x);
    std::vector<Rational> radii;
    radii.reserve(places.size());
    for (const auto& v : places) radii.push_back(escape_radius(fam, lambda, v));

    std::map<RatFunc, long long> seen;
    RatFunc z = x;
    seen.emplace(z, 0);
    out.orbit_prefix.push_back(z);

    for (long long n = 1; n <= max_steps; ++n) {
        z = family_eval(fam, z) + lambda;
        for (size_t i = 0; i < places.size(); ++i) {
            if (z.is_zero()) break;
            Rational a = abs_log(z, places[i]);
            if (a > radii[i]) {
                out.status = OrbitReport::Status::Escaping;
                out.escape_place = places[i];
                out.escape_index = n;
                out.escape_abs_log = a;
                out.orbit_prefix.push_back(z);
                return out;
            }
        }
        auto [it, fresh] = seen.emplace(z, n);
        if (!fresh) {
            out.status = OrbitReport::Status::Preperiodic;
            out.tail = it->second;
            out.period = n - it->second;
            return out;
        }
        out.orbit_prefix.push_back(z);
    }
    out.status = OrbitReport::Status::Undecided;
    return out;
}

LocalHeight local_canonical_height(const BinomialFamily& fam, const RatFunc& lambda,
                                   const RatFunc& x, const Place& v, long long precision_steps) {
    LocalHeight out;
    const Rational rv = escape_radius(fam, lambda, v);
    const Rational zero(0);

    // good reduction: unit ball closed under f_lambda
    bool lambda_integral = lambda.is_zero() || !(abs_log(lambda, v) > zero);
    if (lambda_integral && (x.is_zero() || !(abs_log(x, v) > zero))) {
        out.value = zero;
        out.exact = true;
        return out;
    }

    std::map<RatFunc, long long> seen;
    RatFunc z = x;
    seen.emplace(z, 0);
    BigInt dn = 1;  // d2^n
    for (long long n = 1; n <= precision_steps; ++n) {
        z = family_eval(fam, z) + lambda;
        dn *= fam.d2;
        if (!z.is_zero()) {
            Rational a = abs_log(z, v);
            if (a > rv) {
                // every later step scales the log value by exactly d2
                out.value = a / Rational(dn);
                out.exact = true;
                return out;
            }
        }
        auto [it, fresh] = seen.emplace(z, n);
        if (!fresh) {
            out.value = zero;  // exact value cycle, the orbit is finite
            out.exact = true;
            return out;
        }
    }
    out.value = zero;
    out.exact = false;
    out.bound = Rational::max(rv * Rational(fam.d2), zero) / Rational(dn);
    return out;
}

HeightReport global_canonical_height(const BinomialFamily& fam, const RatFunc& lambda,
                                     const RatFunc& x, long long precision_steps,
                                     const std::optional<std::pair<long long, RatFunc>>& witness) {
    HeightReport out;
    Rational lo(0), hi(0);
    bool exact = true;
    for (const auto& v : tracked_places(lambda, x)) {
        LocalHeight lh = local_canonical_height(fam, lambda, x, v, precision_steps);
        if (lh.exact) {
            lo += lh.value;
            hi += lh.value;
        } else {
            exact = false;
            hi += lh.bound;
        }
        out.locals.emplace_back(v, lh);
    }
    out.global_lower = lo;
    out.global_upper = hi;
    out.global_exact = exact;

    // h(lambda)/d2 - h(x) <= hhat <= h(lambda)/d2 + h(x)
    const Rational mid = weil_height(lambda) / Rational(fam.d2);
    const Rational hx = weil_height(x);
    bool lower_ok = out.global_upper >= mid - hx;
    bool upper_ok = out.global_lower <= mid + hx;
    std::ostringstream det;
    det << "hhat in [" << out.global_lower.to_string() << ", " << out.global_upper.to_string()
        << "], h(lambda)/d2 = " << mid.to_string() << ", h(x) = " << hx.to_string();
    add_check(out.assertions, "height_sandwich_lower", lower_ok, det.str());
    add_check(out.assertions, "height_sandwich_upper", upper_ok, det.str());

    if (witness) {
        auto [m, beta] = *witness;
        RatFunc reached = iterate(fam, lambda, x, m);
        bool hits = reached == beta;
        add_check(out.assertions, "witness_orbit_hits_target", hits,
                  "f_lambda^" + std::to_string(m) + "(x) = " + reached.to_string());
        BigInt dm = 1;
        for (long long i = 0; i < m; ++i) dm *= fam.d2;
        Rational bound = (Rational(2) * weil_height(x) + Rational(2) * weil_height(beta)) / Rational(dm);
        bool ok = !(out.global_lower > bound);
        add_check(out.assertions, "height_target_bound", ok,
                  "hhat >= " + out.global_lower.to_string() + " vs bound " + bound.to_string());
    }
    return out;
}

}  // namespace fqdyn
