#pragma once

#include <optional>
#include <vector>

#include "fqdyn/check.hpp"
#include "fqdyn/family.hpp"

namespace fqdyn {

/// The difference sequences attached to a pair (alpha, beta):
///   eps_0 = beta - alpha,   eps_{n+1} = f(eps_n + alpha) - f(alpha)
///   delta mirrors with alpha and beta swapped, primes subtract index 0.
/// The bar variants track a supplied fiber point abar with f(abar) = f(alpha).
struct EpsSequences {
    std::vector<RatFunc> eps, eps_prime;
    std::vector<RatFunc> delta, delta_prime;
    std::optional<std::vector<RatFunc>> eps_bar, eps_bar_prime, delta_bar;
    RatFunc lambda_alpha;                // alpha - f(alpha)
    std::optional<RatFunc> lambda_abar;  // abar - f(abar)
};

EpsSequences eps_sequences(const BinomialFamily& fam, const RatFunc& alpha, const RatFunc& beta,
                           int N, const std::optional<RatFunc>& abar = std::nullopt);

/// For additive families: checks f_lambda^n(beta) - f_lambda^n(alpha)
/// = f^n(beta - alpha) for 1 <= n <= N, and when alpha has a detected
/// (tail, period) cycle and beta - alpha is constant, exhibits r1 < r2 <= q
/// with matching constant iterates and confirms the orbit of beta repeats.
AssertionTrace additive_identity_check(const BinomialFamily& fam, const RatFunc& alpha,
                                       const RatFunc& beta, const RatFunc& lambda, int N,
                                       long long max_steps = 10000);

/// For (s1, s2) = (2, 1): eps_2 + delta_2 = c1 (2 eps_1 eps_1')^{p^{l1}},
/// both sides computed exactly.
struct SumIdentityResult {
    RatFunc lhs, rhs;
    AssertionTrace trace;
};
SumIdentityResult pair_sum_identity(const BinomialFamily& fam, const RatFunc& alpha,
                                    const RatFunc& beta);

/// Treats the fiber point as an indeterminate X and asserts, as an identity
/// in F_q(t)[X], that
///   (f(eps1+X) - f(X)) - (f(eps1+alpha) - f(alpha))
///     = c1 (sum_{j<s1} C(s1,j) eps1^{s1-j} (X^j - alpha^j))^{p^{l1}}
///     + c2 (sum_{j<s2} C(s2,j) eps1^{s2-j} (X^j - alpha^j))^{p^{l2}}.
struct ShiftIdentityResult {
    RFPoly lhs, rhs;
    AssertionTrace trace;
};
ShiftIdentityResult fiber_shift_identity(const BinomialFamily& fam, const RatFunc& alpha,
                                         const RatFunc& eps1);

/// Divided-difference tower over the fiber:
///   g_1 = (f(eps1+x) - f(x) - (f(eps1+alpha) - f(alpha)))^{1/p^{l1}} / (x - alpha)
///   g_{i+1} = (g_i - g_i(w_i)) / (x - w_i)
/// for r = p^{l2-l1} levels. Degree claims are asserted in the strict-less
/// regime with s2 > 1 and eps1 != 0; supplied fiber points are used as the
/// w_i and g_r is evaluated at them.
struct TowerResult {
    bool eps1_zero = false;
    std::vector<RFPoly> tower;            // g_1 .. g_r
    std::vector<int> degrees;             // deg g_i
    std::optional<RatFunc> lead_numerator;  // leading coefficient of (x - alpha) g_1
    std::vector<RatFunc> values;          // g_r at the supplied points
    AssertionTrace trace;
};
TowerResult divided_difference_tower(const BinomialFamily& fam, const RatFunc& alpha,
                                     const RatFunc& eps1,
                                     const std::vector<RatFunc>& fiber_points = {});

/// In the equal regime the only admissible constant values of
/// eps_1 = f(beta) - f(alpha) are 0 and the roots of
/// eps^{p^{l2} - p^{l1}} = -c1 s1 / (c2 s2), found in a small extension.
struct ObstructionResult {
    GFElem target;                    // -c1 s1 / (c2 s2) in the family's field
    const FieldSpec* field;           // where the admissible values live
    std::vector<GFElem> admissible;   // includes 0, sorted
};
ObstructionResult rho1_obstruction(const BinomialFamily& fam);

}  // namespace fqdyn
