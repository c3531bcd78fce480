#pragma once

#include <map>
#include <optional>
#include <vector>

#include "fqdyn/check.hpp"
#include "fqdyn/family.hpp"
#include "fqdyn/places.hpp"

namespace fqdyn {

/// f_lambda^n(x) with f_lambda(x) = f(x) + lambda; n = 0 is the identity.
RatFunc iterate(const BinomialFamily& fam, const RatFunc& lambda, const RatFunc& x, long long n);

/// Place-local escape radius max(0, |c1|_v/(d2-d1), |lambda|_v/d2) in log
/// units. Above it one application of f_lambda provably multiplies the log
/// absolute value by d2, so the orbit is unbounded.
Rational escape_radius(const BinomialFamily& fam, const RatFunc& lambda, const Place& v);

/// Orbit classification by exact value repetition or a certified escape.
struct OrbitReport {
    enum class Status { Preperiodic, Escaping, Undecided };
    Status status = Status::Undecided;
    // Preperiodic: f_lambda^{tail}(x) = f_lambda^{tail+period}(x), both minimal.
    long long tail = 0;
    long long period = 0;
    // Escaping: first n >= 1 whose value exceeds the radius at some place.
    std::optional<Place> escape_place;
    long long escape_index = 0;
    Rational escape_abs_log;
    long long steps_used = 0;  // bound that was tried when Undecided
    std::vector<RatFunc> orbit_prefix;
};

OrbitReport preperiodic(const BinomialFamily& fam, const RatFunc& lambda, const RatFunc& x,
                        long long max_steps = 10000);

/// Local canonical height at v: the escape rate lim log+ |f_lambda^n(x)|_v / d2^n.
struct LocalHeight {
    Rational value;   // exact when `exact`, else 0 with `bound` an upper bound
    bool exact = false;
    Rational bound;   // meaningful only when !exact
};
LocalHeight local_canonical_height(const BinomialFamily& fam, const RatFunc& lambda,
                                   const RatFunc& x, const Place& v, long long precision_steps = 32);

/// Global canonical height assembled over supp(lambda) and supp(x); other
/// places have good reduction and contribute 0. When a witness relation
/// f_lambda^m(x) = beta is supplied the corresponding height bound is
/// asserted alongside the usual sandwich h(lambda)/d2 - h(x) <= hhat <=
/// h(lambda)/d2 + h(x).
struct HeightReport {
    std::vector<std::pair<Place, LocalHeight>> locals;
    Rational global_lower, global_upper;  // equal when exact
    bool global_exact = false;
    AssertionTrace assertions;
};
HeightReport global_canonical_height(const BinomialFamily& fam, const RatFunc& lambda,
                                     const RatFunc& x, long long precision_steps = 32,
                                     const std::optional<std::pair<long long, RatFunc>>& witness =
                                         std::nullopt);

}  // namespace fqdyn
