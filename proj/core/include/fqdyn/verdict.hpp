#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fqdyn/check.hpp"
#include "fqdyn/family.hpp"
#include "fqdyn/places.hpp"

namespace fqdyn {

/// Number of distinct roots of P in an algebraic closure of F_q(t), computed
/// through gcds and p-power descent without materializing any root.
long long distinct_root_count(const RFPoly& P);

/// f_u^m(alpha) as a polynomial in the parameter u over F_q(t). The
/// u-degree is d2^{m-1}; beyond 10^4 this raises TooLargeError.
RFPoly parameter_iterate_poly(const BinomialFamily& fam, const RatFunc& alpha, long long m);

/// f_lambda^m(alpha) - f_lambda^n(alpha) as a polynomial in lambda over
/// F_q(t); its distinct roots are the parameters making alpha collide with
/// its own later iterate.
struct ParamPoly {
    long long m, n;
    RFPoly poly;  // in lambda
    long long distinct_roots;
};
std::vector<ParamPoly> param_preperiodicity_polys(const BinomialFamily& fam, const RatFunc& alpha,
                                                  const std::vector<std::pair<long long, long long>>& pairs);

enum class VerdictOutcome {
    InfiniteTrivial,        // alpha, beta constants
    InfiniteCollision,      // f(alpha) = f(beta)
    InfiniteConstantShift,  // additive family with beta - alpha constant
    Finite,
    EdgeUnknown,            // equal regime, constant eps1 satisfying the obstruction
};
std::string verdict_outcome_name(VerdictOutcome v);

struct Verdict {
    VerdictOutcome outcome;
    std::string reason;
    RatFunc eps1;                       // f(beta) - f(alpha)
    std::optional<GFElem> edge_value;   // the obstruction-satisfying constant
    AssertionTrace evidence;            // necessary conditions; a failed entry
                                        // independently certifies finiteness
    AssertionTrace assertions;          // internal consistency, must pass
};

/// Regime-dispatched decision for whether infinitely many parameters make
/// both points preperiodic. Infinite outcomes always rest on an exact
/// algebraic witness, never on numerical evidence.
Verdict prep_verdict(const BinomialFamily& fam, const RatFunc& alpha, const RatFunc& beta);

}  // namespace fqdyn
