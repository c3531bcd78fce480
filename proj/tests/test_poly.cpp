#include <gtest/gtest.h>

#include "fqdyn/factor.hpp"
#include "test_util.hpp"

using namespace fqdyn;
using namespace fqdyn::test;

namespace {

GFPoly from_ints(const FieldSpec* s, std::initializer_list<long long> lo_to_hi) {
    std::vector<GFElem> c;
    for (long long v : lo_to_hi) c.push_back(s->from_int(v));
    return GFPoly(std::move(c));
}

GFPoly mul_out(const Factorization& f) {
    GFPoly acc = GFPoly::constant(f.lead);
    for (const auto& [g, m] : f.factors) acc *= poly_pow(g, m);
    return acc;
}

}  // namespace

TEST(Poly, DivremAndGcdExamples) {
    const FieldSpec* f5 = F5();
    GFPoly x2m1 = from_ints(f5, {4, 0, 1});  // x^2 - 1
    GFPoly xm1 = from_ints(f5, {4, 1});      // x - 1
    EXPECT_EQ(poly_gcd(x2m1, xm1), xm1);

    GFPoly x3 = from_ints(f5, {0, 0, 0, 1});
    GFPoly x = from_ints(f5, {0, 1});
    auto [q, r] = poly_divrem(x3, x);
    EXPECT_EQ(q, from_ints(f5, {0, 0, 1}));
    EXPECT_TRUE(r.is_zero());

    EXPECT_THROW(poly_divrem(x3, GFPoly()), DivisionByZeroError);
}

TEST(Poly, KaratsubaMatchesSchoolbookShape) {
    // associativity of large products exercises the karatsuba path
    Rng rng(31);
    const FieldSpec* s = F3();
    GFPoly a = random_poly(s, 70, rng);
    GFPoly b = random_poly(s, 55, rng);
    GFPoly c = random_poly(s, 33, rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
}

TEST(Poly, PthPowerAndRoot) {
    Rng rng(37);
    for (const FieldSpec* s : {F2(), F3(), F9()}) {
        for (int i = 0; i < 50; ++i) {
            GFPoly a = random_poly(s, 6, rng);
            GFPoly ap = poly_pow_p(a, s->p);
            EXPECT_EQ(ap, poly_pow(a, s->p));
            auto back = poly_pth_root(ap, s->p);
            ASSERT_TRUE(back.has_value());
            EXPECT_EQ(*back, a);
        }
    }
}

TEST(Factor, RoundTripRandoms) {
    Rng rng(41);
    for (const FieldSpec* s : {F2(), F3(), F9()}) {
        for (int i = 0; i < 170; ++i) {
            GFPoly f = random_poly(s, 1 + static_cast<int>(rng.below(20)), rng);
            Factorization fac = poly_factor(f, rng);
            EXPECT_EQ(mul_out(fac), f) << "field " << s->to_string();
            for (const auto& [g, m] : fac.factors) {
                EXPECT_TRUE(g.is_monic());
                EXPECT_GE(m, 1);
            }
        }
    }
}

TEST(Factor, IrreducibleDegreeSpotCheck) {
    // each reported irreducible of degree e divides x^{q^e} - x and no
    // x^{q^j} - x with j < e
    Rng rng(43);
    const FieldSpec* s = F3();
    for (int i = 0; i < 40; ++i) {
        GFPoly f = random_poly(s, 2 + static_cast<int>(rng.below(10)), rng);
        for (const auto& [g, m] : poly_factor(f, rng).factors) {
            int e = g.degree();
            GFPoly x = GFPoly::monomial(s->one(), 1);
            for (int j = 1; j <= e; ++j) {
                GFPoly xq = poly_powmod(x, big_pow(BigInt(s->q), static_cast<unsigned long long>(j)), g);
                bool divides = (xq - poly_divrem(x, g).second).is_zero();
                EXPECT_EQ(divides, j == e) << "degree " << e << " at j = " << j;
            }
        }
    }
}

TEST(Factor, SplittingOfFieldPolynomial) {
    // x^q - x splits into all q monic linear factors
    for (const FieldSpec* s : {F3(), F4()}) {
        GFPoly xq = GFPoly::monomial(s->one(), static_cast<size_t>(s->q)) -
                    GFPoly::monomial(s->one(), 1);
        Factorization fac = poly_factor(xq, 0);
        EXPECT_EQ(static_cast<long long>(fac.factors.size()), s->q);
        for (const auto& [g, m] : fac.factors) {
            EXPECT_EQ(g.degree(), 1);
            EXPECT_EQ(m, 1);
        }
    }
}

TEST(Factor, InseparablePthPowerDescent) {
    // (x - 1)^p factors through the derivative-zero branch
    for (const FieldSpec* s : {F2(), F3(), F5()}) {
        GFPoly xm1 = GFPoly::monomial(s->one(), 1) - GFPoly::constant(s->one());
        GFPoly f = poly_pow(xm1, s->p);
        Factorization fac = poly_factor(f, 0);
        ASSERT_EQ(fac.factors.size(), 1u);
        EXPECT_EQ(fac.factors[0].first, xm1);
        EXPECT_EQ(fac.factors[0].second, s->p);
    }
}

TEST(Factor, QuadraticSplitsOverF9) {
    // x^2 + 1 = (x + w)(x - w) over F_9 with w^2 = -1
    const FieldSpec* s = F9();
    GFPoly f = GFPoly::monomial(s->one(), 2) + GFPoly::constant(s->one());
    Factorization fac = poly_factor(f, 0);
    ASSERT_EQ(fac.factors.size(), 2u);
    GFElem w = s->generator();
    GFPoly xpw = GFPoly::monomial(s->one(), 1) + GFPoly::constant(w);
    GFPoly xmw = GFPoly::monomial(s->one(), 1) - GFPoly::constant(w);
    EXPECT_TRUE((fac.factors[0].first == xpw && fac.factors[1].first == xmw) ||
                (fac.factors[0].first == xmw && fac.factors[1].first == xpw));
}

TEST(Factor, ReproducibleForFixedSeed) {
    Rng rng(47);
    const FieldSpec* s = F9();
    GFPoly f = random_poly(s, 12, rng);
    Factorization a = poly_factor(f, 1234);
    Factorization b = poly_factor(f, 1234);
    EXPECT_EQ(a.factors.size(), b.factors.size());
    for (size_t i = 0; i < a.factors.size(); ++i) {
        EXPECT_EQ(a.factors[i].first, b.factors[i].first);
        EXPECT_EQ(a.factors[i].second, b.factors[i].second);
    }
}

TEST(Factor, IrreducibilityTest) {
    const FieldSpec* s = F3();
    EXPECT_TRUE(poly_is_irreducible(from_ints(s, {1, 2, 0, 1})));   // x^3 + 2x + 1
    EXPECT_FALSE(poly_is_irreducible(from_ints(s, {2, 0, 1})));     // x^2 + 2 = (x+1)(x+2)
    EXPECT_TRUE(poly_is_irreducible(from_ints(s, {1, 0, 1})));      // x^2 + 1
}
