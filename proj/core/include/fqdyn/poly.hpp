#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fqdyn/errors.hpp"
#include "fqdyn/gf.hpp"

namespace fqdyn {

// Coefficient hooks. Each coefficient field provides overloads of
// zero_like/one_like (an exemplar supplies the runtime field) plus the
// characteristic-p helpers used by frobenius powers and p-th roots.
inline GFElem zero_like(const GFElem& a) { return a.spec()->zero(); }
inline GFElem one_like(const GFElem& a) { return a.spec()->one(); }
inline GFElem coeff_pow_p(const GFElem& a, long long p) { return gf_pow(a, p); }
inline std::optional<GFElem> coeff_pth_root(const GFElem& a) {
    return gf_frobenius(a, -1);
}

/// Dense univariate polynomial over a coefficient field F, low-to-high with
/// no trailing zeros; the zero polynomial is the empty list.
template <class F>
class Polynomial {
   public:
    Polynomial() = default;
    explicit Polynomial(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Polynomial constant(const F& v) {
        Polynomial r;
        if (!v.is_zero()) r.c_.push_back(v);
        return r;
    }
    /// c * x^e
    static Polynomial monomial(const F& c, size_t e) {
        Polynomial r;
        if (!c.is_zero()) {
            r.c_.assign(e, zero_like(c));
            r.c_.push_back(c);
        }
        return r;
    }

    const std::vector<F>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const F& lc() const {
        if (c_.empty()) throw ZeroPolynomialError("leading coefficient of zero polynomial");
        return c_.back();
    }
    /// Coefficient of x^i, or `zero` when out of range.
    F coeff(size_t i, const F& zero) const { return i < c_.size() ? c_[i] : zero; }

    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
    friend bool operator<(const Polynomial& a, const Polynomial& b) {
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        std::vector<F> r;
        const size_t n = std::max(a.c_.size(), b.c_.size());
        r.reserve(n);
        const F zero = zero_like(a.c_.empty() ? b.c_[0] : a.c_[0]);
        for (size_t i = 0; i < n; ++i) {
            F v = zero;
            if (i < a.c_.size()) v += a.c_[i];
            if (i < b.c_.size()) v += b.c_[i];
            r.push_back(std::move(v));
        }
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        if (std::min(a.c_.size(), b.c_.size()) >= kKaratsubaCutoff)
            return karatsuba(a.c_, b.c_);
        return schoolbook(a.c_, b.c_);
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const F& s) const {
        if (s.is_zero()) return Polynomial();
        Polynomial r = *this;
        for (auto& c : r.c_) c = c * s;
        r.trim();
        return r;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return scaled(one_like(c_[0]) / lc());
    }

    /// Multiply by x^e.
    Polynomial shifted_up(size_t e) const {
        if (is_zero() || e == 0) return *this;
        std::vector<F> r;
        r.reserve(c_.size() + e);
        r.assign(e, zero_like(c_[0]));
        r.insert(r.end(), c_.begin(), c_.end());
        return Polynomial(std::move(r));
    }

    F eval(const F& at) const {
        if (is_zero()) return zero_like(at);
        F acc = zero_like(at);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial();
        std::vector<F> r;
        r.reserve(c_.size() - 1);
        const F one = one_like(c_[0]);
        F n = one;
        for (size_t i = 1; i < c_.size(); ++i) {
            r.push_back(c_[i] * n);
            n += one;
        }
        return Polynomial(std::move(r));
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    static constexpr size_t kKaratsubaCutoff = 24;

    static Polynomial schoolbook(const std::vector<F>& a, const std::vector<F>& b) {
        const F zero = zero_like(a[0]);
        std::vector<F> r(a.size() + b.size() - 1, zero);
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i].is_zero()) continue;
            for (size_t j = 0; j < b.size(); ++j) {
                if (b[j].is_zero()) continue;
                r[i + j] += a[i] * b[j];
            }
        }
        return Polynomial(std::move(r));
    }

    static Polynomial karatsuba(const std::vector<F>& a, const std::vector<F>& b) {
        if (std::min(a.size(), b.size()) < kKaratsubaCutoff) return schoolbook(a, b);
        const size_t h = std::max(a.size(), b.size()) / 2;
        auto split = [&](const std::vector<F>& v) {
            Polynomial lo(std::vector<F>(v.begin(), v.begin() + std::min(h, v.size())));
            Polynomial hi(v.size() > h ? std::vector<F>(v.begin() + h, v.end()) : std::vector<F>{});
            return std::make_pair(std::move(lo), std::move(hi));
        };
        auto [a0, a1] = split(a);
        auto [b0, b1] = split(b);
        Polynomial z0 = a0 * b0;
        Polynomial z2 = a1 * b1;
        Polynomial z1 = (a0 + a1) * (b0 + b1) - z0 - z2;
        return z0 + z1.shifted_up(h) + z2.shifted_up(2 * h);
    }

    std::vector<F> c_;
};

/// Quotient and remainder; the divisor must be nonzero.
template <class F>
std::pair<Polynomial<F>, Polynomial<F>> poly_divrem(const Polynomial<F>& a, const Polynomial<F>& b) {
    if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial<F>(), a};
    const F zero = zero_like(b.lc());
    std::vector<F> rem(a.coeffs());
    std::vector<F> quo(static_cast<size_t>(a.degree() - b.degree()) + 1, zero);
    const F lead_inv = one_like(b.lc()) / b.lc();
    const auto& bc = b.coeffs();
    const size_t db = bc.size() - 1;
    for (size_t off = rem.size() - bc.size() + 1; off-- > 0;) {
        F c = rem[off + db] * lead_inv;
        if (c.is_zero()) continue;
        quo[off] = c;
        for (size_t j = 0; j < bc.size(); ++j) rem[off + j] -= c * bc[j];
    }
    return {Polynomial<F>(std::move(quo)), Polynomial<F>(std::move(rem))};
}

/// Exact quotient; throws InexactDivisionError when the remainder is nonzero.
template <class F>
Polynomial<F> poly_exact_div(const Polynomial<F>& a, const Polynomial<F>& b) {
    auto [q, r] = poly_divrem(a, b);
    if (!r.is_zero()) throw InexactDivisionError("polynomial division left a remainder");
    return q;
}

/// Monic gcd.
template <class F>
Polynomial<F> poly_gcd(Polynomial<F> a, Polynomial<F> b) {
    while (!b.is_zero()) {
        auto [q, r] = poly_divrem(a, b.monic());
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <class F>
Polynomial<F> poly_pow(const Polynomial<F>& a, long long e) {
    if (e < 0) throw Error("negative exponent in poly_pow");
    if (e == 0) {
        if (a.is_zero()) throw ZeroPolynomialError("0^0 for polynomials is not defined here");
        return Polynomial<F>::constant(one_like(a.lc()));
    }
    Polynomial<F> r;
    Polynomial<F> base = a;
    bool have = false;
    long long m = e;
    while (m > 0) {
        if (m & 1) {
            r = have ? r * base : base;
            have = true;
        }
        base = base * base;
        m >>= 1;
    }
    return r;
}

/// a^p computed coefficient-wise: (sum a_i x^i)^p = sum a_i^p x^{ip}.
template <class F>
Polynomial<F> poly_pow_p(const Polynomial<F>& a, long long p) {
    if (a.is_zero()) return a;
    const F zero = zero_like(a.lc());
    std::vector<F> r(static_cast<size_t>(a.degree()) * static_cast<size_t>(p) + 1, zero);
    for (size_t i = 0; i < a.coeffs().size(); ++i)
        if (!a.coeffs()[i].is_zero()) r[i * static_cast<size_t>(p)] = coeff_pow_p(a.coeffs()[i], p);
    return Polynomial<F>(std::move(r));
}

/// a^{p^l} via repeated coefficient-wise p-th powers.
template <class F>
Polynomial<F> poly_pow_p_iter(Polynomial<F> a, long long p, int l) {
    for (int i = 0; i < l; ++i) a = poly_pow_p(a, p);
    return a;
}

/// Coefficient-wise p-th root; nullopt when some exponent is not a multiple
/// of p or a coefficient has no p-th root.
template <class F>
std::optional<Polynomial<F>> poly_pth_root(const Polynomial<F>& a, long long p) {
    if (a.is_zero()) return a;
    const F zero = zero_like(a.lc());
    std::vector<F> r(static_cast<size_t>(a.degree()) / static_cast<size_t>(p) + 1, zero);
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i].is_zero()) continue;
        if (i % static_cast<size_t>(p) != 0) return std::nullopt;
        auto root = coeff_pth_root(a.coeffs()[i]);
        if (!root) return std::nullopt;
        r[i / static_cast<size_t>(p)] = *root;
    }
    return Polynomial<F>(std::move(r));
}

/// Composition a(b(x)) by Horner.
template <class F>
Polynomial<F> poly_compose(const Polynomial<F>& a, const Polynomial<F>& b) {
    Polynomial<F> acc;
    for (size_t i = a.coeffs().size(); i-- > 0;) {
        acc = acc * b + Polynomial<F>::constant(a.coeffs()[i]);
    }
    return acc;
}

/// Decimation: given a = Q(x^p) (all exponents multiples of p), return Q
/// without touching the coefficients.
template <class F>
std::optional<Polynomial<F>> poly_undecimate(const Polynomial<F>& a, long long p) {
    if (a.is_zero()) return a;
    const F zero = zero_like(a.lc());
    std::vector<F> r(static_cast<size_t>(a.degree()) / static_cast<size_t>(p) + 1, zero);
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i].is_zero()) continue;
        if (i % static_cast<size_t>(p) != 0) return std::nullopt;
        r[i / static_cast<size_t>(p)] = a.coeffs()[i];
    }
    return Polynomial<F>(std::move(r));
}

using GFPoly = Polynomial<GFElem>;

}  // namespace fqdyn
