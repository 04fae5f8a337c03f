#ifndef GALREP_POLY_HPP
#define GALREP_POLY_HPP

/* Dense univariate polynomials over pluggable coefficient rings.
 *
 * A ring is a context object (it may carry a modulus) exposing Elem plus the
 * usual operations; polynomials are plain coefficient vectors, ascending,
 * normalized so the leading coefficient is nonzero. Everything here is
 * schoolbook and exact; the performance-sensitive quotient arithmetic lives
 * in quotient.hpp.
 */

#include "galrep/bigint.hpp"

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace galrep {

struct ring_mismatch : std::domain_error {
    using std::domain_error::domain_error;
};

// ---- coefficient rings ------------------------------------------------------

struct ZRing {
    using Elem = BigInt;
    static constexpr bool is_field = false;
    Elem zero() const { return BigInt(0); }
    Elem one() const { return BigInt(1); }
    Elem from_long(long v) const { return BigInt(v); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    void addmul(Elem& acc, const Elem& a, const Elem& b) const { acc.addmul(a, b); }
    bool invert(Elem& out, const Elem& a) const {
        if (a == BigInt(1) || a == BigInt(-1)) {
            out = a;
            return true;
        }
        return false;
    }
};

struct QRing {
    using Elem = BigRat;
    static constexpr bool is_field = true;
    Elem zero() const { return BigRat(0L); }
    Elem one() const { return BigRat(1L); }
    Elem from_long(long v) const { return BigRat(v); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    void addmul(Elem& acc, const Elem& a, const Elem& b) const { acc += a * b; }
    bool invert(Elem& out, const Elem& a) const {
        if (a.is_zero()) return false;
        out = BigRat(1L) / a;
        return true;
    }
};

// Z/m with BigInt modulus; elements canonical in [0, m). Field ops succeed
// exactly when the relevant element is invertible mod m.
struct ZModRing {
    BigInt m;
    bool field_hint = false;  // set when m is known prime

    using Elem = BigInt;
    static constexpr bool is_field = false;  // invert() decides at runtime
    explicit ZModRing(BigInt mod, bool prime = false) : m(std::move(mod)), field_hint(prime) {}
    Elem zero() const { return BigInt(0); }
    Elem one() const { return BigInt(1).mod(m); }
    Elem from_long(long v) const { return BigInt(v).mod(m); }
    Elem reduce(const BigInt& a) const { return a.mod(m); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem add(const Elem& a, const Elem& b) const {
        BigInt r = a + b;
        if (r >= m) r -= m;
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        BigInt r = a - b;
        if (r.sign() < 0) r += m;
        return r;
    }
    Elem mul(const Elem& a, const Elem& b) const { return (a * b).mod(m); }
    Elem neg(const Elem& a) const { return a.is_zero() ? a : m - a; }
    void addmul(Elem& acc, const Elem& a, const Elem& b) const {
        acc.addmul(a, b);
        acc = acc.mod(m);
    }
    bool invert(Elem& out, const Elem& a) const {
        auto r = invmod(a, m);
        if (!r) return false;
        out = *r;
        return true;
    }
};

// F_p for word-size prime p; the workhorse for factorization searches.
struct WordRing {
    uint64_t p;

    using Elem = uint64_t;
    static constexpr bool is_field = true;
    explicit WordRing(uint64_t prime) : p(prime) {}
    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem from_long(long v) const {
        long r = v % static_cast<long>(p);
        if (r < 0) r += static_cast<long>(p);
        return static_cast<uint64_t>(r);
    }
    Elem reduce(const BigInt& a) const {
        return mpz_fdiv_ui(a.raw(), p);
    }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    Elem add(Elem a, Elem b) const {
        uint64_t r = a + b;
        if (r >= p || r < a) r -= p;
        return r;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem mul(Elem a, Elem b) const { return mulmod_u64(a, b, p); }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    void addmul(Elem& acc, Elem a, Elem b) const { acc = add(acc, mul(a, b)); }
    bool invert(Elem& out, Elem a) const {
        if (a == 0) return false;
        out = invmod_u64(a, p);
        return true;
    }
};

// ---- polynomials ------------------------------------------------------------

template <class R>
struct Poly {
    std::vector<typename R::Elem> c;  // ascending; c.back() nonzero unless empty

    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
};

template <class R>
void poly_normalize(const R& ring, Poly<R>& f) {
    while (!f.c.empty() && ring.is_zero(f.c.back())) f.c.pop_back();
}

template <class R>
Poly<R> poly_from(const R& ring, std::vector<typename R::Elem> coeffs) {
    Poly<R> f;
    f.c = std::move(coeffs);
    poly_normalize(ring, f);
    return f;
}

template <class R>
Poly<R> poly_from_longs(const R& ring, std::initializer_list<long> coeffs) {
    Poly<R> f;
    for (long v : coeffs) f.c.push_back(ring.from_long(v));
    poly_normalize(ring, f);
    return f;
}

template <class R>
Poly<R> poly_zero(const R&) {
    return Poly<R>{};
}

template <class R>
Poly<R> poly_one(const R& ring) {
    Poly<R> f;
    f.c.push_back(ring.one());
    return f;
}

template <class R>
Poly<R> poly_x(const R& ring) {
    Poly<R> f;
    f.c.push_back(ring.zero());
    f.c.push_back(ring.one());
    return f;
}

template <class R>
bool poly_eq(const R& ring, const Poly<R>& a, const Poly<R>& b) {
    if (a.c.size() != b.c.size()) return false;
    for (size_t i = 0; i < a.c.size(); ++i)
        if (!ring.eq(a.c[i], b.c[i])) return false;
    return true;
}

template <class R>
typename R::Elem poly_lc(const R& ring, const Poly<R>& f) {
    return f.is_zero() ? ring.zero() : f.c.back();
}

template <class R>
typename R::Elem poly_coeff(const R& ring, const Poly<R>& f, int i) {
    if (i < 0 || i > f.deg()) return ring.zero();
    return f.c[static_cast<size_t>(i)];
}

template <class R>
Poly<R> poly_add(const R& ring, const Poly<R>& a, const Poly<R>& b) {
    Poly<R> r;
    size_t n = std::max(a.c.size(), b.c.size());
    r.c.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        if (i < a.c.size() && i < b.c.size())
            r.c.push_back(ring.add(a.c[i], b.c[i]));
        else if (i < a.c.size())
            r.c.push_back(a.c[i]);
        else
            r.c.push_back(b.c[i]);
    }
    poly_normalize(ring, r);
    return r;
}

template <class R>
Poly<R> poly_sub(const R& ring, const Poly<R>& a, const Poly<R>& b) {
    Poly<R> r;
    size_t n = std::max(a.c.size(), b.c.size());
    r.c.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        if (i < a.c.size() && i < b.c.size())
            r.c.push_back(ring.sub(a.c[i], b.c[i]));
        else if (i < a.c.size())
            r.c.push_back(a.c[i]);
        else
            r.c.push_back(ring.neg(b.c[i]));
    }
    poly_normalize(ring, r);
    return r;
}

template <class R>
Poly<R> poly_neg(const R& ring, const Poly<R>& a) {
    Poly<R> r = a;
    for (auto& x : r.c) x = ring.neg(x);
    return r;
}

template <class R>
Poly<R> poly_scale(const R& ring, const Poly<R>& a, const typename R::Elem& s) {
    Poly<R> r;
    r.c.reserve(a.c.size());
    for (const auto& x : a.c) r.c.push_back(ring.mul(x, s));
    poly_normalize(ring, r);
    return r;
}

template <class R>
Poly<R> poly_mul(const R& ring, const Poly<R>& a, const Poly<R>& b) {
    if (a.is_zero() || b.is_zero()) return Poly<R>{};
    Poly<R> r;
    r.c.assign(a.c.size() + b.c.size() - 1, ring.zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (ring.is_zero(a.c[i])) continue;
        for (size_t j = 0; j < b.c.size(); ++j) ring.addmul(r.c[i + j], a.c[i], b.c[j]);
    }
    poly_normalize(ring, r);
    return r;
}

template <class R>
Poly<R> poly_shift(const R& ring, const Poly<R>& a, int k) {
    if (a.is_zero()) return a;
    Poly<R> r;
    r.c.assign(a.c.size() + static_cast<size_t>(k), ring.zero());
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i + static_cast<size_t>(k)] = a.c[i];
    return r;
}

// Division with remainder. Requires lc(b) invertible (monic divisor or field).
template <class R>
std::pair<Poly<R>, Poly<R>> poly_divrem(const R& ring, const Poly<R>& a, const Poly<R>& b) {
    if (b.is_zero()) throw std::domain_error("poly_divrem: division by zero polynomial");
    typename R::Elem lcinv;
    if (!ring.invert(lcinv, b.c.back()))
        throw std::domain_error("poly_divrem: leading coefficient not invertible");
    Poly<R> q, r = a;
    if (a.deg() < b.deg()) return {q, r};
    q.c.assign(static_cast<size_t>(a.deg() - b.deg()) + 1, ring.zero());
    int db = b.deg();
    for (int i = r.deg(); i >= db; --i) {
        if (ring.is_zero(r.c[static_cast<size_t>(i)])) continue;
        typename R::Elem t = ring.mul(r.c[static_cast<size_t>(i)], lcinv);
        q.c[static_cast<size_t>(i - db)] = t;
        typename R::Elem nt = ring.neg(t);
        for (int j = 0; j <= db; ++j)
            ring.addmul(r.c[static_cast<size_t>(i - db + j)], nt, b.c[static_cast<size_t>(j)]);
    }
    poly_normalize(ring, q);
    poly_normalize(ring, r);
    return {q, r};
}

template <class R>
Poly<R> poly_rem(const R& ring, const Poly<R>& a, const Poly<R>& b) {
    return poly_divrem(ring, a, b).second;
}

// Monic gcd over a field (or a ring where every encountered lc is invertible).
template <class R>
Poly<R> poly_gcd(const R& ring, Poly<R> a, Poly<R> b) {
    while (!b.is_zero()) {
        Poly<R> r = poly_rem(ring, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) {
        typename R::Elem inv;
        if (!ring.invert(inv, a.c.back()))
            throw std::domain_error("poly_gcd: cannot make gcd monic");
        a = poly_scale(ring, a, inv);
    }
    return a;
}

template <class R>
Poly<R> poly_derivative(const R& ring, const Poly<R>& f) {
    Poly<R> r;
    if (f.deg() < 1) return r;
    r.c.reserve(f.c.size() - 1);
    for (int i = 1; i <= f.deg(); ++i)
        r.c.push_back(ring.mul(f.c[static_cast<size_t>(i)], ring.from_long(i)));
    poly_normalize(ring, r);
    return r;
}

template <class R>
typename R::Elem poly_eval(const R& ring, const Poly<R>& f, const typename R::Elem& x) {
    typename R::Elem acc = ring.zero();
    for (int i = f.deg(); i >= 0; --i) {
        acc = ring.mul(acc, x);
        acc = ring.add(acc, f.c[static_cast<size_t>(i)]);
    }
    return acc;
}

// g^e mod (F, ring), square-and-multiply; the "double modulus" power ladder.
template <class R>
Poly<R> poly_powmod(const R& ring, const Poly<R>& g, const BigInt& e, const Poly<R>& F) {
    if (e.sign() < 0) throw std::domain_error("poly_powmod: negative exponent");
    Poly<R> base = poly_rem(ring, g, F);
    Poly<R> acc = poly_one(ring);
    size_t nb = e.bits();
    for (size_t i = nb; i-- > 0;) {
        acc = poly_rem(ring, poly_mul(ring, acc, acc), F);
        if (mpz_tstbit(e.raw(), i)) acc = poly_rem(ring, poly_mul(ring, acc, base), F);
    }
    return acc;
}

// Power sums p_0..p_k of the roots of monic F via Newton's identities
// (division-free direction). p_j lives in the coefficient ring.
template <class R>
std::vector<typename R::Elem> poly_root_power_sums(const R& ring, const Poly<R>& F, int k) {
    int n = F.deg();
    if (n < 0 || !ring.eq(F.c.back(), ring.one()))
        throw std::domain_error("poly_root_power_sums: F must be monic");
    std::vector<typename R::Elem> p;
    p.push_back(ring.from_long(n));
    for (int j = 1; j <= k; ++j) {
        // p_j + sum_{i=1}^{j-1} a_{n-i} p_{j-i} + j*a_{n-j} = 0, a_m = 0 for m < 0
        typename R::Elem s = ring.zero();
        for (int i = 1; i < j; ++i) {
            int ai = n - i;
            if (ai < 0) break;
            ring.addmul(s, F.c[static_cast<size_t>(ai)], p[static_cast<size_t>(j - i)]);
        }
        if (n - j >= 0)
            ring.addmul(s, ring.from_long(j), F.c[static_cast<size_t>(n - j)]);
        p.push_back(ring.neg(s));
    }
    return p;
}

// Trace of the multiplication-by-g endomorphism of ring[x]/F, computed from
// the power sums of F's roots.
template <class R>
typename R::Elem algebra_trace(const R& ring, const Poly<R>& g, const Poly<R>& F) {
    auto ps = poly_root_power_sums(ring, F, F.deg() - 1);
    typename R::Elem t = ring.zero();
    for (int i = 0; i <= g.deg(); ++i) ring.addmul(t, g.c[static_cast<size_t>(i)], ps[static_cast<size_t>(i)]);
    return t;
}

// ---- ring conversions ---------------------------------------------------------

template <class RM>
Poly<RM> poly_reduce(const RM& ring, const Poly<ZRing>& f) {
    Poly<RM> r;
    r.c.reserve(f.c.size());
    for (const auto& x : f.c) r.c.push_back(ring.reduce(x));
    poly_normalize(ring, r);
    return r;
}

inline Poly<QRing> poly_to_q(const Poly<ZRing>& f) {
    Poly<QRing> r;
    r.c.reserve(f.c.size());
    for (const auto& x : f.c) r.c.push_back(BigRat(x));
    return r;
}

// Clear denominators and strip content; returns the primitive integer image.
Poly<ZRing> poly_q_to_primitive_z(const Poly<QRing>& f);

// Content (gcd of coefficients, sign of leading coefficient preserved in part).
BigInt poly_content(const Poly<ZRing>& f);
Poly<ZRing> poly_primitive_part(const Poly<ZRing>& f);

// string form like "x^3 - 2*x + 1" for diagnostics
std::string poly_str(const Poly<ZRing>& f);

}  // namespace galrep

#endif
