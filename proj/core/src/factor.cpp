#include "fqdyn/factor.hpp"

#include <algorithm>
#include <map>

namespace fqdyn {

GFPoly poly_powmod(const GFPoly& f, const BigInt& e, const GFPoly& m) {
    GFPoly base = poly_divrem(f, m).second;
    GFPoly r = GFPoly::constant(m.lc().spec()->one());
    BigInt k = e;
    while (k > 0) {
        if ((k & 1) != 0) r = poly_divrem(r * base, m).second;
        base = poly_divrem(base * base, m).second;
        k >>= 1;
    }
    return r;
}

std::vector<std::pair<GFPoly, long long>> squarefree_decomposition(const GFPoly& f) {
    if (f.is_zero()) throw ZeroPolynomialError("squarefree decomposition of zero");
    const long long p = f.lc().spec()->p;
    std::vector<std::pair<GFPoly, long long>> out;

    // Recursion on p-th-power layers: the loop below extracts all parts with
    // multiplicity not divisible by p; what remains is a p-th power.
    std::function<void(GFPoly, long long)> run = [&](GFPoly g, long long mult) {
        g = g.monic();
        if (g.is_constant()) return;
        GFPoly gp = g.derivative();
        if (gp.is_zero()) {
            auto root = poly_pth_root(g, p);
            if (!root) throw Error("derivative-zero polynomial is not a p-th power");
            run(*root, mult * p);
            return;
        }
        GFPoly c = poly_gcd(g, gp);
        GFPoly w = poly_exact_div(g, c);
        long long i = 1;
        while (!w.is_constant()) {
            GFPoly y = poly_gcd(w, c);
            GFPoly part = poly_exact_div(w, y);
            if (part.degree() > 0) out.emplace_back(part.monic(), i * mult);
            w = std::move(y);
            c = poly_exact_div(c, w);
            ++i;
        }
        if (c.degree() > 0) {
            auto root = poly_pth_root(c, p);
            if (!root) throw Error("residual factor is not a p-th power");
            run(*root, mult * p);
        }
    };
    run(f, 1);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second < b.second : a.first < b.first;
    });
    return out;
}

namespace {

// Distinct-degree split of a monic squarefree polynomial: (product of
// irreducibles of degree d, d) pairs.
std::vector<std::pair<GFPoly, int>> distinct_degree(const GFPoly& f0) {
    const FieldSpec* spec = f0.lc().spec();
    std::vector<std::pair<GFPoly, int>> out;
    GFPoly f = f0;
    GFPoly x = GFPoly::monomial(spec->one(), 1);
    GFPoly h = poly_divrem(x, f).second;
    int d = 0;
    while (f.degree() > 0) {
        ++d;
        if (2 * d > f.degree()) {
            out.emplace_back(f, f.degree());
            break;
        }
        h = poly_powmod(h, BigInt(spec->q), f);
        GFPoly g = poly_gcd(h - poly_divrem(x, f).second, f);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = poly_exact_div(f, g);
            h = poly_divrem(h, f).second;
        }
    }
    return out;
}

// Equal-degree splitting (Cantor–Zassenhaus) of a monic squarefree product
// of irreducibles all of degree d.
void equal_degree(const GFPoly& f, int d, Rng& rng, std::vector<GFPoly>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const FieldSpec* spec = f.lc().spec();
    const long long p = spec->p;
    while (true) {
        GFPoly r = random_poly(spec, static_cast<int>(rng.below(static_cast<std::uint64_t>(f.degree()))) , rng);
        if (r.is_zero()) continue;
        GFPoly g = poly_gcd(r, f);
        if (g.degree() == 0) {
            if (p == 2) {
                // trace map sum_{i<k*d} r^{2^i} mod f
                GFPoly t = poly_divrem(r, f).second;
                GFPoly acc = t;
                long long bits = static_cast<long long>(spec->k) * d;
                for (long long i = 1; i < bits; ++i) {
                    t = poly_divrem(t * t, f).second;
                    acc += t;
                }
                g = poly_gcd(acc, f);
            } else {
                BigInt e = (big_pow(BigInt(spec->q), static_cast<unsigned long long>(d)) - 1) / 2;
                GFPoly s = poly_powmod(r, e, f);
                g = poly_gcd(s - GFPoly::constant(spec->one()), f);
            }
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(poly_exact_div(f, g), d, rng, out);
            return;
        }
    }
}

}  // namespace

Factorization poly_factor(const GFPoly& f, Rng& rng) {
    if (f.is_zero()) throw ZeroPolynomialError("factorization of zero");
    Factorization out{f.lc(), {}};
    if (f.degree() == 0) return out;
    std::map<GFPoly, long long> found;
    for (const auto& [part, mult] : squarefree_decomposition(f.monic())) {
        for (const auto& [prod, d] : distinct_degree(part)) {
            std::vector<GFPoly> irreducibles;
            equal_degree(prod, d, rng, irreducibles);
            for (auto& irr : irreducibles) found[irr] += mult;
        }
    }
    out.factors.assign(found.begin(), found.end());
    return out;
}

Factorization poly_factor(const GFPoly& f, std::uint64_t seed) {
    Rng rng(seed);
    return poly_factor(f, rng);
}

bool poly_is_irreducible(const GFPoly& f) {
    if (f.degree() < 1) return false;
    const FieldSpec* spec = f.lc().spec();
    int n = f.degree();
    if (n == 1) return true;
    GFPoly x = GFPoly::monomial(spec->one(), 1);
    GFPoly xq = poly_powmod(x, big_pow(BigInt(spec->q), static_cast<unsigned long long>(n)), f);
    if (xq != poly_divrem(x, f).second) return false;
    int m = n;
    std::vector<int> primes;
    for (int r = 2; r * r <= m; ++r)
        if (m % r == 0) {
            primes.push_back(r);
            while (m % r == 0) m /= r;
        }
    if (m > 1) primes.push_back(m);
    for (int r : primes) {
        GFPoly h = poly_powmod(x, big_pow(BigInt(spec->q), static_cast<unsigned long long>(n / r)), f);
        if (poly_gcd(h - x, f).degree() != 0) return false;
    }
    return true;
}

GFPoly random_poly(const FieldSpec* spec, int d, Rng& rng, bool monic) {
    if (d < 0) return GFPoly();
    std::vector<GFElem> c;
    c.reserve(static_cast<size_t>(d) + 1);
    for (int i = 0; i < d; ++i)
        c.push_back(spec->element_from_index(static_cast<long long>(rng.below(static_cast<std::uint64_t>(spec->q)))));
    if (monic) {
        c.push_back(spec->one());
    } else {
        // nonzero leading coefficient so the degree is exact
        c.push_back(spec->element_from_index(1 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(spec->q - 1)))));
    }
    return GFPoly(std::move(c));
}

}  // namespace fqdyn
