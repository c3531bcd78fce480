#pragma once

#include <boost/container/small_vector.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fqdyn/errors.hpp"
#include "fqdyn/rational.hpp"

namespace fqdyn {

class GFElem;

/// Description of a coefficient field F_{p^k}: the characteristic, the
/// extension degree and a monic irreducible modulus over F_p. Specs are
/// interned, so two specs with the same data are the same pointer and field
/// compatibility is a pointer comparison. Interned specs live for the whole
/// process.
class FieldSpec {
   public:
    long long p;                     // prime characteristic
    int k;                           // extension degree >= 1
    std::vector<long long> modulus;  // monic degree-k, low-to-high, k+1 entries in [0,p)
    long long q;                     // p^k

    /// Interning constructor. Validates primality of p, shape and
    /// irreducibility of the modulus. Throws ParseError / TooLargeError.
    static const FieldSpec* make(long long p, int k, std::vector<long long> modulus);

    /// F_p with modulus x.
    static const FieldSpec* make_prime(long long p);

    /// Degree-m extension of this spec, i.e. F_{p^{k*m}}, with a
    /// deterministically chosen modulus (first irreducible in enumeration
    /// order over F_p).
    const FieldSpec* extension(int m) const;

    /// Text form "p^k/c_k,...,c_1,c_0" (modulus high-to-low); accepts the
    /// shorthands "p" and "p^k" with a deterministically generated modulus.
    static const FieldSpec* parse(std::string_view text);
    std::string to_string() const;

    GFElem zero() const;
    GFElem one() const;
    GFElem from_int(long long n) const;       // n mod p as a constant
    GFElem generator() const;                  // class of x in F_p[x]/(modulus); k >= 2
    GFElem element_from_index(long long idx) const;  // base-p digits, 0 <= idx < q
    long long index_of(const GFElem& a) const;

    /// Parse/print element coordinates "a_{k-1},...,a_0" (high-to-low).
    GFElem parse_element(std::string_view text) const;

   private:
    FieldSpec() = default;
};

/// Element of F_{p^k} in the power basis of its spec's modulus.
class GFElem {
   public:
    using Coeffs = boost::container::small_vector<long long, 4>;

    GFElem() : spec_(nullptr) {}
    GFElem(const FieldSpec* spec, Coeffs c) : spec_(spec), c_(std::move(c)) {}

    const FieldSpec* spec() const { return spec_; }
    const Coeffs& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    /// True when the element lies in the prime subfield F_p.
    bool in_prime_field() const;

    GFElem operator-() const;
    GFElem& operator+=(const GFElem& o);
    GFElem& operator-=(const GFElem& o);
    GFElem& operator*=(const GFElem& o);
    GFElem& operator/=(const GFElem& o);

    friend GFElem operator+(GFElem a, const GFElem& b) { return a += b; }
    friend GFElem operator-(GFElem a, const GFElem& b) { return a -= b; }
    friend GFElem operator*(GFElem a, const GFElem& b) { return a *= b; }
    friend GFElem operator/(GFElem a, const GFElem& b) { return a /= b; }

    friend bool operator==(const GFElem& a, const GFElem& b);
    friend bool operator!=(const GFElem& a, const GFElem& b) { return !(a == b); }
    friend bool operator<(const GFElem& a, const GFElem& b);  // order for containers

    GFElem inverse() const;

    std::string to_string() const;  // coordinates "a_{k-1},...,a_0"

   private:
    const FieldSpec* spec_;
    Coeffs c_;
};

/// a^e with e >= 0; by convention 0^0 = 1.
GFElem gf_pow(const GFElem& a, const BigInt& e);
GFElem gf_pow(const GFElem& a, long long e);

/// a^{p^j} for j >= 0; for j < 0 the unique b with b^{p^{|j|}} = a.
GFElem gf_frobenius(const GFElem& a, long long j);

/// A root of x^n = a together with the (possibly extended) field it lives in.
/// The field is extended to F_{q^m} for the smallest m such that a root
/// exists there. Requires a != 0.
std::pair<GFElem, const FieldSpec*> gf_nth_root(const GFElem& a, long long n);

/// Field embedding F_{p^k} -> F_{p^K} for k | K, determined by the first root
/// of the source modulus in the destination (in element enumeration order).
class Embedding {
   public:
    const FieldSpec* src;
    const FieldSpec* dst;
    GFElem map(const GFElem& a) const;

   private:
    friend const Embedding& get_embedding(const FieldSpec* src, const FieldSpec* dst);
    GFElem root_;  // image of the source generator
    Embedding(const FieldSpec* s, const FieldSpec* d, GFElem r)
        : src(s), dst(d), root_(std::move(r)) {}
};

/// Cached per spec pair. Throws MixedFieldsError when no embedding exists
/// (different characteristic or k does not divide K).
const Embedding& get_embedding(const FieldSpec* src, const FieldSpec* dst);

namespace detail {
/// Dense polynomial arithmetic over F_p on raw coefficient vectors
/// (low-to-high, trimmed). Used to bootstrap modulus validation before
/// GFElem exists, and by the modular inverse.
using PVec = std::vector<long long>;
PVec pv_trim(PVec a);
PVec pv_mulmod(const PVec& a, const PVec& b, const PVec& m, long long p);
PVec pv_mod(PVec a, const PVec& m, long long p);
PVec pv_gcd(PVec a, PVec b, long long p);
bool pv_is_irreducible(const PVec& f, long long p);
long long mod_inverse(long long a, long long p);
}  // namespace detail

}  // namespace fqdyn
