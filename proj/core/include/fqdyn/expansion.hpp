#pragma once

#include <vector>

#include "fqdyn/bipoly.hpp"
#include "fqdyn/check.hpp"
#include "fqdyn/family.hpp"

namespace fqdyn {

/// f_lambda^n(x) written as sum_i c_{n,i}(x) lambda^{d2^{n-1} - i}, with the
/// highest lambda-degree coefficient of positive x-degree singled out as
/// a_n(x) lambda^{b_n}. The u_j are the constants recovered from successive
/// a-coefficients (a_{j+1} - s2 a_j^{p^{l2}} when that difference is
/// constant).
struct IterateExpansion {
    long long n = 0;
    long long top = 1;  // d2^{n-1}, the lambda-degree
    BiPoly expansion;
    GFPoly a_n;
    long long b_n = 0;
    std::vector<GFElem> u_trace;
    AssertionTrace checks;  // specialization spot-checks

    /// c_{n,i}(x), I.e. the coefficient of lambda^{top - i}.
    GFPoly coeff_by_coindex(long long i) const { return expansion.lambda_coeff(top - i); }
};

/// Cost is governed by the lambda-degree d2^{n-1}; degrees beyond the
/// default budget of 10^4 raise TooLargeError.
IterateExpansion expand_iterate(const BinomialFamily& fam, long long n,
                                long long max_lambda_degree = 10000);

/// Structural checks on the expansion for levels 1..n: boundary
/// coefficients, the degree bound deg c_{n,i} <= d2 * i, and in the
/// strict-less regime with s2 > 1 and monic families the (a, b) recursion
/// with its closed form and the separation from the lower-degree branch.
struct ExpansionChecks {
    long long n;
    std::vector<long long> b;       // b_1 .. b_n
    std::vector<GFPoly> a;          // a_1 .. a_n
    std::vector<GFElem> u_trace;
    AssertionTrace trace;
};
ExpansionChecks expansion_checks(const BinomialFamily& fam, long long n);

/// f_u^m(alpha) - beta as a polynomial in the parameter u, for m in
/// [m_lo, m_hi], with distinct-root counts and the running count of the
/// union of root sets across m.
struct TargetPoly {
    long long m;
    RFPoly poly;
    long long distinct_roots;
    long long cumulative_distinct;
};
std::vector<TargetPoly> target_param_polys(const BinomialFamily& fam, const RatFunc& alpha,
                                           const RatFunc& beta, long long m_lo, long long m_hi);

/// Exhaustive scan of a finite search field for parameters lambda whose
/// strict forward orbits of alpha1 and alpha2 both reach beta; witnesses are
/// the first hitting times (m, n >= 1).
struct CollisionWitness {
    GFElem lambda;
    long long m, n;
};
struct CollisionSet {
    const FieldSpec* field;
    std::vector<CollisionWitness> lambdas;
};
CollisionSet collision_search(const BinomialFamily& fam, const FieldSpec* search_field,
                              const GFElem& alpha1, const GFElem& alpha2, const GFElem& beta);

}  // namespace fqdyn
