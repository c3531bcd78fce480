#pragma once

#include <utility>
#include <vector>

#include "fqdyn/poly.hpp"
#include "fqdyn/rng.hpp"

namespace fqdyn {

/// f^e mod m with an arbitrary-precision exponent.
GFPoly poly_powmod(const GFPoly& f, const BigInt& e, const GFPoly& m);

/// Squarefree decomposition of a monic polynomial over F_q. Returns pairwise
/// coprime monic squarefree parts with their multiplicities; the product of
/// part^mult is the input. Derivative-zero input descends through
/// coefficient-wise p-th roots.
std::vector<std::pair<GFPoly, long long>> squarefree_decomposition(const GFPoly& f);

/// Full factorization into monic irreducibles with multiplicities, times the
/// leading coefficient. Randomized equal-degree splitting driven by `rng` so
/// results are reproducible for a fixed seed; the returned list is sorted.
struct Factorization {
    GFElem lead;
    std::vector<std::pair<GFPoly, long long>> factors;
};
Factorization poly_factor(const GFPoly& f, Rng& rng);
Factorization poly_factor(const GFPoly& f, std::uint64_t seed = 0);

bool poly_is_irreducible(const GFPoly& f);

/// Uniformly random polynomial of degree exactly d (monic when requested).
GFPoly random_poly(const FieldSpec* spec, int d, Rng& rng, bool monic = false);

}  // namespace fqdyn
