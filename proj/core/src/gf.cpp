#include "fqdyn/gf.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace fqdyn {

namespace detail {

long long mod_inverse(long long a, long long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw DivisionByZeroError("inverse of 0 mod p");
    long long t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        long long qq = r / nr;
        std::tie(t, nt) = std::make_tuple(nt, t - qq * nt);
        std::tie(r, nr) = std::make_tuple(nr, r - qq * nr);
    }
    if (t < 0) t += p;
    return t;
}

PVec pv_trim(PVec a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

static PVec pv_mul(const PVec& a, const PVec& b, long long p) {
    if (a.empty() || b.empty()) return {};
    PVec r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return pv_trim(std::move(r));
}

PVec pv_mod(PVec a, const PVec& m, long long p) {
    a = pv_trim(std::move(a));
    long long lead_inv = mod_inverse(m.back(), p);
    while (a.size() >= m.size()) {
        long long c = a.back() % p * lead_inv % p;
        size_t off = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) a[off + i] = ((a[off + i] - c * m[i]) % p + p) % p;
        a = pv_trim(std::move(a));
    }
    return a;
}

PVec pv_mulmod(const PVec& a, const PVec& b, const PVec& m, long long p) {
    return pv_mod(pv_mul(a, b, p), m, p);
}

static PVec pv_powmod_x(BigInt e, const PVec& m, long long p) {
    // x^e mod m
    PVec base = pv_mod({0, 1}, m, p);
    PVec r = {1};
    while (e > 0) {
        if ((e & 1) != 0) r = pv_mulmod(r, base, m, p);
        base = pv_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

PVec pv_gcd(PVec a, PVec b, long long p) {
    a = pv_trim(std::move(a));
    b = pv_trim(std::move(b));
    while (!b.empty()) {
        PVec r = pv_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        long long inv = mod_inverse(a.back(), p);
        for (auto& c : a) c = c * inv % p;
    }
    return a;
}

bool pv_is_irreducible(const PVec& f, long long p) {
    // Rabin's test: x^{p^n} == x mod f, and gcd(x^{p^{n/r}} - x, f) = 1 for
    // every prime r | n.
    int n = static_cast<int>(f.size()) - 1;
    if (n <= 0) return false;
    if (n == 1) return true;
    PVec x = pv_mod({0, 1}, f, p);
    PVec xf = pv_powmod_x(big_pow(BigInt(p), static_cast<unsigned long long>(n)), f, p);
    if (pv_trim(xf) != pv_trim(x)) return false;
    int m = n;
    std::vector<int> primes;
    for (int r = 2; r * r <= m; ++r) {
        if (m % r == 0) {
            primes.push_back(r);
            while (m % r == 0) m /= r;
        }
    }
    if (m > 1) primes.push_back(m);
    for (int r : primes) {
        PVec h = pv_powmod_x(big_pow(BigInt(p), static_cast<unsigned long long>(n / r)), f, p);
        // h - x
        PVec d = h;
        if (d.size() < 2) d.resize(2, 0);
        d[1] = ((d[1] - 1) % p + p) % p;
        d = pv_trim(std::move(d));
        PVec g = pv_gcd(d, f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

static bool is_prime_ll(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace detail

using detail::PVec;

// ---------------------------------------------------------------------------
// FieldSpec interning
// ---------------------------------------------------------------------------

namespace {

struct SpecKey {
    long long p;
    int k;
    std::vector<long long> mod;
    bool operator<(const SpecKey& o) const {
        return std::tie(p, k, mod) < std::tie(o.p, o.k, o.mod);
    }
};

std::mutex g_spec_mutex;
std::map<SpecKey, std::unique_ptr<FieldSpec>>& spec_registry() {
    static std::map<SpecKey, std::unique_ptr<FieldSpec>> reg;
    return reg;
}

constexpr long long kMaxQ = 1LL << 62;

// First monic irreducible of degree k over F_p in enumeration order of the
// lower coefficients.
std::vector<long long> deterministic_modulus(long long p, int k) {
    if (k == 1) return {0, 1};
    BigInt count = big_pow(BigInt(p), static_cast<unsigned long long>(k));
    if (count > 20'000'000) throw TooLargeError("modulus search space too large");
    long long total = static_cast<long long>(count);
    std::vector<long long> f(static_cast<size_t>(k) + 1, 0);
    f[static_cast<size_t>(k)] = 1;
    for (long long idx = 0; idx < total; ++idx) {
        long long v = idx;
        for (int i = 0; i < k; ++i) {
            f[static_cast<size_t>(i)] = v % p;
            v /= p;
        }
        if (detail::pv_is_irreducible(f, p)) return f;
    }
    throw Error("no irreducible modulus found");  // unreachable
}

}  // namespace

const FieldSpec* FieldSpec::make(long long p, int k, std::vector<long long> modulus) {
    if (!detail::is_prime_ll(p)) throw ParseError("characteristic must be prime, got " + std::to_string(p));
    if (k < 1) throw ParseError("extension degree must be >= 1");
    if (modulus.size() != static_cast<size_t>(k) + 1)
        throw ParseError("modulus must have exactly k+1 coefficients");
    for (auto& c : modulus) {
        c %= p;
        if (c < 0) c += p;
    }
    if (modulus.back() != 1) throw ParseError("modulus must be monic");
    if (!detail::pv_is_irreducible(modulus, p)) throw ParseError("modulus is not irreducible over F_p");

    BigInt q = big_pow(BigInt(p), static_cast<unsigned long long>(k));
    if (q > kMaxQ) throw TooLargeError("field cardinality p^k exceeds 2^62");

    SpecKey key{p, k, modulus};
    std::lock_guard<std::mutex> lock(g_spec_mutex);
    auto& reg = spec_registry();
    auto it = reg.find(key);
    if (it != reg.end()) return it->second.get();
    auto spec = std::unique_ptr<FieldSpec>(new FieldSpec());
    spec->p = p;
    spec->k = k;
    spec->modulus = std::move(modulus);
    spec->q = static_cast<long long>(q);
    const FieldSpec* out = spec.get();
    reg.emplace(std::move(key), std::move(spec));
    return out;
}

const FieldSpec* FieldSpec::make_prime(long long p) { return make(p, 1, {0, 1}); }

const FieldSpec* FieldSpec::extension(int m) const {
    if (m < 1) throw ParseError("extension degree must be >= 1");
    if (m == 1) return this;
    return make(p, k * m, deterministic_modulus(p, k * m));
}

const FieldSpec* FieldSpec::parse(std::string_view text) {
    auto bad = [&] { return ParseError("bad field spec '" + std::string(text) + "' (expected p^k/c_k,...,c_0)"); };
    auto parse_ll = [&](std::string_view s) {
        long long v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size()) throw bad();
        return v;
    };
    size_t slash = text.find('/');
    std::string_view head = slash == std::string_view::npos ? text : text.substr(0, slash);
    size_t caret = head.find('^');
    long long p = parse_ll(caret == std::string_view::npos ? head : head.substr(0, caret));
    long long k = caret == std::string_view::npos ? 1 : parse_ll(head.substr(caret + 1));
    if (k < 1 || k > 64) throw bad();
    if (slash == std::string_view::npos) {
        if (k == 1) return make_prime(p);
        return make(p, static_cast<int>(k), deterministic_modulus(p, static_cast<int>(k)));
    }
    std::vector<long long> coeffs;
    std::string_view rest = text.substr(slash + 1);
    while (!rest.empty()) {
        size_t comma = rest.find(',');
        coeffs.push_back(parse_ll(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    std::reverse(coeffs.begin(), coeffs.end());  // text is high-to-low
    if (coeffs.size() != static_cast<size_t>(k) + 1) throw bad();
    return make(p, static_cast<int>(k), std::move(coeffs));
}

std::string FieldSpec::to_string() const {
    std::ostringstream os;
    os << p << '^' << k << '/';
    for (int i = k; i >= 0; --i) {
        os << modulus[static_cast<size_t>(i)];
        if (i > 0) os << ',';
    }
    return os.str();
}

GFElem FieldSpec::zero() const { return GFElem(this, GFElem::Coeffs(static_cast<size_t>(k), 0)); }

GFElem FieldSpec::one() const { return from_int(1); }

GFElem FieldSpec::from_int(long long n) const {
    GFElem::Coeffs c(static_cast<size_t>(k), 0);
    n %= p;
    if (n < 0) n += p;
    c[0] = n;
    return GFElem(this, std::move(c));
}

GFElem FieldSpec::generator() const {
    if (k < 2) throw Error("prime field has no extension generator");
    GFElem::Coeffs c(static_cast<size_t>(k), 0);
    c[1] = 1;
    return GFElem(this, std::move(c));
}

GFElem FieldSpec::element_from_index(long long idx) const {
    GFElem::Coeffs c(static_cast<size_t>(k), 0);
    for (int i = 0; i < k; ++i) {
        c[static_cast<size_t>(i)] = idx % p;
        idx /= p;
    }
    return GFElem(this, std::move(c));
}

long long FieldSpec::index_of(const GFElem& a) const {
    long long idx = 0;
    for (int i = k - 1; i >= 0; --i) idx = idx * p + a.coeffs()[static_cast<size_t>(i)];
    return idx;
}

GFElem FieldSpec::parse_element(std::string_view text) const {
    std::vector<long long> vals;
    std::string_view rest = text;
    while (!rest.empty()) {
        size_t comma = rest.find(',');
        std::string_view piece = rest.substr(0, comma);
        long long v = 0;
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
        if (ec != std::errc() || ptr != piece.data() + piece.size())
            throw ParseError("bad element coordinates '" + std::string(text) + "'");
        vals.push_back(v);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    if (vals.size() != static_cast<size_t>(k))
        throw ParseError("element needs exactly k coordinates, got " + std::to_string(vals.size()));
    GFElem::Coeffs c(static_cast<size_t>(k), 0);
    for (int i = 0; i < k; ++i) {
        long long v = vals[static_cast<size_t>(k - 1 - i)] % p;
        if (v < 0) v += p;
        c[static_cast<size_t>(i)] = v;
    }
    return GFElem(this, std::move(c));
}

// ---------------------------------------------------------------------------
// GFElem arithmetic
// ---------------------------------------------------------------------------

namespace {
void require_same(const GFElem& a, const GFElem& b) {
    if (a.spec() != b.spec())
        throw MixedFieldsError("elements of distinct fields " +
                               (a.spec() ? a.spec()->to_string() : "<null>") + " and " +
                               (b.spec() ? b.spec()->to_string() : "<null>"));
}
}  // namespace

bool GFElem::is_zero() const {
    for (long long c : c_)
        if (c != 0) return false;
    return true;
}

bool GFElem::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool GFElem::in_prime_field() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

GFElem GFElem::operator-() const {
    GFElem r = *this;
    long long p = spec_->p;
    for (auto& c : r.c_) c = (p - c) % p;
    return r;
}

GFElem& GFElem::operator+=(const GFElem& o) {
    require_same(*this, o);
    long long p = spec_->p;
    for (size_t i = 0; i < c_.size(); ++i) {
        c_[i] += o.c_[i];
        if (c_[i] >= p) c_[i] -= p;
    }
    return *this;
}

GFElem& GFElem::operator-=(const GFElem& o) {
    require_same(*this, o);
    long long p = spec_->p;
    for (size_t i = 0; i < c_.size(); ++i) {
        c_[i] -= o.c_[i];
        if (c_[i] < 0) c_[i] += p;
    }
    return *this;
}

GFElem& GFElem::operator*=(const GFElem& o) {
    require_same(*this, o);
    const long long p = spec_->p;
    const int k = spec_->k;
    if (k == 1) {
        c_[0] = c_[0] * o.c_[0] % p;
        return *this;
    }
    boost::container::small_vector<long long, 8> tmp(static_cast<size_t>(2 * k - 1), 0);
    for (int i = 0; i < k; ++i) {
        if (c_[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < k; ++j)
            tmp[static_cast<size_t>(i + j)] =
                (tmp[static_cast<size_t>(i + j)] + c_[static_cast<size_t>(i)] * o.c_[static_cast<size_t>(j)]) % p;
    }
    // reduce mod the monic modulus
    const auto& m = spec_->modulus;
    for (int d = 2 * k - 2; d >= k; --d) {
        long long c = tmp[static_cast<size_t>(d)];
        if (c == 0) continue;
        tmp[static_cast<size_t>(d)] = 0;
        for (int i = 0; i < k; ++i)
            tmp[static_cast<size_t>(d - k + i)] =
                ((tmp[static_cast<size_t>(d - k + i)] - c * m[static_cast<size_t>(i)]) % p + p) % p;
    }
    for (int i = 0; i < k; ++i) c_[static_cast<size_t>(i)] = tmp[static_cast<size_t>(i)];
    return *this;
}

GFElem GFElem::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero field element");
    const long long p = spec_->p;
    if (spec_->k == 1) {
        GFElem r = *this;
        r.c_[0] = detail::mod_inverse(c_[0], p);
        return r;
    }
    // extended Euclid in F_p[x] against the modulus
    PVec a(c_.begin(), c_.end());
    a = detail::pv_trim(std::move(a));
    PVec m = spec_->modulus;
    PVec t0 = {}, t1 = {1};
    PVec r0 = m, r1 = a;
    while (!r1.empty()) {
        // divide r0 by r1
        PVec quo;
        PVec rem = r0;
        long long lead_inv = detail::mod_inverse(r1.back(), p);
        while (rem.size() >= r1.size() && !rem.empty()) {
            long long c = rem.back() * lead_inv % p;
            size_t off = rem.size() - r1.size();
            if (quo.size() < off + 1) quo.resize(off + 1, 0);
            quo[off] = c;
            for (size_t i = 0; i < r1.size(); ++i)
                rem[off + i] = ((rem[off + i] - c * r1[i]) % p + p) % p;
            rem = detail::pv_trim(std::move(rem));
        }
        // t0, t1 = t1, t0 - quo*t1
        PVec qt = detail::pv_trim(quo.empty() ? PVec{} : [&] {
            PVec r(quo.size() + (t1.empty() ? 1 : t1.size()) - 1, 0);
            for (size_t i = 0; i < quo.size(); ++i)
                for (size_t j = 0; j < t1.size(); ++j) r[i + j] = (r[i + j] + quo[i] * t1[j]) % p;
            return r;
        }());
        PVec nt(std::max(t0.size(), qt.size()), 0);
        for (size_t i = 0; i < nt.size(); ++i) {
            long long v = (i < t0.size() ? t0[i] : 0) - (i < qt.size() ? qt[i] : 0);
            nt[i] = (v % p + p) % p;
        }
        t0 = std::move(t1);
        t1 = detail::pv_trim(std::move(nt));
        r0 = std::move(r1);
        r1 = std::move(rem);
    }
    // r0 = gcd (a unit); scale t0 by its inverse
    long long scale = detail::mod_inverse(r0[0], p);
    GFElem::Coeffs c(static_cast<size_t>(spec_->k), 0);
    for (size_t i = 0; i < t0.size(); ++i) c[i] = t0[i] * scale % p;
    return GFElem(spec_, std::move(c));
}

GFElem& GFElem::operator/=(const GFElem& o) {
    require_same(*this, o);
    return *this *= o.inverse();
}

bool operator==(const GFElem& a, const GFElem& b) {
    return a.spec_ == b.spec_ && a.c_ == b.c_;
}

bool operator<(const GFElem& a, const GFElem& b) {
    if (a.spec_ != b.spec_) return a.spec_ < b.spec_;
    return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
}

std::string GFElem::to_string() const {
    std::ostringstream os;
    for (int i = spec_->k - 1; i >= 0; --i) {
        os << c_[static_cast<size_t>(i)];
        if (i > 0) os << ',';
    }
    return os.str();
}

GFElem gf_pow(const GFElem& a, const BigInt& e) {
    if (e < 0) throw Error("negative exponent in gf_pow");
    GFElem r = a.spec()->one();  // 0^0 = 1 by convention
    GFElem base = a;
    BigInt m = e;
    while (m > 0) {
        if ((m & 1) != 0) r *= base;
        base *= base;
        m >>= 1;
    }
    return r;
}

GFElem gf_pow(const GFElem& a, long long e) { return gf_pow(a, BigInt(e)); }

GFElem gf_frobenius(const GFElem& a, long long j) {
    const FieldSpec* spec = a.spec();
    long long k = spec->k;
    long long jm = ((j % k) + k) % k;  // Frobenius has order k
    GFElem r = a;
    for (long long i = 0; i < jm; ++i) r = gf_pow(r, spec->p);
    return r;
}

// ---------------------------------------------------------------------------
// Embeddings
// ---------------------------------------------------------------------------

namespace {
std::mutex g_embed_mutex;
std::map<std::pair<const FieldSpec*, const FieldSpec*>, std::unique_ptr<Embedding>>& embed_registry() {
    static std::map<std::pair<const FieldSpec*, const FieldSpec*>, std::unique_ptr<Embedding>> reg;
    return reg;
}
}  // namespace

GFElem Embedding::map(const GFElem& a) const {
    if (a.spec() != src) throw MixedFieldsError("embedding applied to element of a different field");
    // evaluate a's coordinate polynomial at root_ (Horner)
    GFElem acc = dst->zero();
    for (int i = src->k - 1; i >= 0; --i) {
        acc = acc * root_ + dst->from_int(a.coeffs()[static_cast<size_t>(i)]);
    }
    return acc;
}

const Embedding& get_embedding(const FieldSpec* src, const FieldSpec* dst) {
    if (src->p != dst->p) throw MixedFieldsError("embedding across different characteristics");
    if (dst->k % src->k != 0) throw MixedFieldsError("no embedding: extension degree mismatch");
    std::lock_guard<std::mutex> lock(g_embed_mutex);
    auto& reg = embed_registry();
    auto key = std::make_pair(src, dst);
    auto it = reg.find(key);
    if (it != reg.end()) return *it->second;

    GFElem root = dst->zero();
    if (src == dst) {
        root = dst->k >= 2 ? dst->generator() : dst->one();
    } else {
        if (dst->q > (1LL << 22)) throw TooLargeError("embedding root search space too large");
        bool found = false;
        for (long long idx = 0; idx < dst->q; ++idx) {
            GFElem z = dst->element_from_index(idx);
            GFElem acc = dst->zero();
            for (int i = src->k; i >= 0; --i)
                acc = acc * z + dst->from_int(src->modulus[static_cast<size_t>(i)]);
            if (acc.is_zero()) {
                root = z;
                found = true;
                break;
            }
        }
        if (!found) throw Error("embedding root not found");  // cannot happen for k | K
    }
    auto emb = std::unique_ptr<Embedding>(new Embedding(src, dst, std::move(root)));
    const Embedding* out = emb.get();
    reg.emplace(key, std::move(emb));
    return *out;
}

std::pair<GFElem, const FieldSpec*> gf_nth_root(const GFElem& a, long long n) {
    if (a.is_zero()) throw ZeroInputError("nth root of zero");
    if (n < 1) throw Error("nth root needs n >= 1");
    const FieldSpec* spec = a.spec();
    if (n == 1) return {a, spec};
    for (int m = 1;; ++m) {
        BigInt qm = big_pow(BigInt(spec->q), static_cast<unsigned long long>(m));
        if (qm > (1LL << 22)) throw TooLargeError("nth root search exceeded field size budget");
        const FieldSpec* ext = spec->extension(m);
        const Embedding& emb = get_embedding(spec, ext);
        GFElem b = emb.map(a);
        BigInt order = qm - 1;
        BigInt g = boost::multiprecision::gcd(BigInt(n), order);
        if (gf_pow(b, order / g).is_one()) {
            // a root exists in this field; locate it by scan
            for (long long idx = 1; idx < ext->q; ++idx) {
                GFElem z = ext->element_from_index(idx);
                if (gf_pow(z, n) == b) return {z, ext};
            }
            throw Error("nth root existence criterion held but no root found");
        }
    }
}

}  // namespace fqdyn
