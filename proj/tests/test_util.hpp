#pragma once

#include <vector>

#include "fqdyn/expr.hpp"
#include "fqdyn/factor.hpp"
#include "fqdyn/family.hpp"
#include "fqdyn/places.hpp"
#include "fqdyn/rng.hpp"

namespace fqdyn::test {

inline const FieldSpec* F2() { return FieldSpec::make_prime(2); }
inline const FieldSpec* F3() { return FieldSpec::make_prime(3); }
inline const FieldSpec* F5() { return FieldSpec::make_prime(5); }
// F4 = F2[w]/(w^2 + w + 1)
inline const FieldSpec* F4() { return FieldSpec::make(2, 2, {1, 1, 1}); }
// F9 = F3[w]/(w^2 + 1)
inline const FieldSpec* F9() { return FieldSpec::make(3, 2, {1, 0, 1}); }
// F27 = F3[w]/(w^3 + 2w + 1)
inline const FieldSpec* F27() { return FieldSpec::make(3, 3, {1, 2, 0, 1}); }

inline GFElem gf(const FieldSpec* s, long long n) { return s->from_int(n); }

inline RatFunc rf(const FieldSpec* s, const char* text) { return parse_ratfunc(text, s); }

inline BinomialFamily fam(const FieldSpec* s, const char* text) { return parse_family(text, s); }

/// Random nonzero rational function with numerator/denominator degrees < d.
inline RatFunc random_ratfunc(const FieldSpec* s, int d, Rng& rng, bool poly_only = false) {
    GFPoly num;
    while (num.is_zero()) num = random_poly(s, static_cast<int>(rng.below(static_cast<std::uint64_t>(d))), rng);
    if (poly_only || rng.coin()) return RatFunc::from_poly(s, num);
    GFPoly den = random_poly(s, static_cast<int>(rng.below(static_cast<std::uint64_t>(d))), rng, true);
    return RatFunc::from_ratio(s, num, den);
}

inline GFElem random_elem(const FieldSpec* s, Rng& rng) {
    return s->element_from_index(static_cast<long long>(rng.below(static_cast<std::uint64_t>(s->q))));
}

inline GFElem random_nonzero_elem(const FieldSpec* s, Rng& rng) {
    return s->element_from_index(1 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(s->q - 1))));
}

}  // namespace fqdyn::test
