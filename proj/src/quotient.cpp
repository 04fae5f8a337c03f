#include "galrep/quotient.hpp"

#include <cstring>
#include <stdexcept>

namespace galrep {

namespace {
constexpr size_t kBitsPerLimb = GMP_NUMB_BITS;
}

PolyQuotCtx::PolyQuotCtx(BigInt modulus, const Poly<ZRing>& F) : m_(std::move(modulus)), F_(F) {
    if (F.deg() < 1 || !F.c.back().is_one())
        throw std::domain_error("PolyQuotCtx: modulus polynomial must be monic of degree >= 1");
    if (m_ <= BigInt(1)) throw std::domain_error("PolyQuotCtx: modulus must exceed 1");
    n_ = F.deg();
    Fred_.reserve(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) Fred_.push_back(F.c[static_cast<size_t>(i)].mod(m_));
    // slot must hold n * m^2 plus the reduction slack; one extra bit covers both
    size_t mbits = m_.bits();
    size_t need = 2 * mbits + 64;  // log2(n) < 64 always
    slot_limbs_ = (need + kBitsPerLimb - 1) / kBitsPerLimb;
    use_kronecker_ = n_ >= 8 && mbits >= 192;
}

PolyQuotCtx::Elem PolyQuotCtx::one() const {
    Elem e(static_cast<size_t>(n_));
    e[0] = BigInt(1).mod(m_);
    return e;
}

PolyQuotCtx::Elem PolyQuotCtx::gen() const {
    if (n_ == 1) {
        // t = -F[0] in the degree-1 quotient
        Elem e(1);
        e[0] = (-F_.c[0]).mod(m_);
        return e;
    }
    Elem e(static_cast<size_t>(n_));
    e[1] = BigInt(1).mod(m_);
    return e;
}

PolyQuotCtx::Elem PolyQuotCtx::from_poly(const Poly<ZRing>& g) const {
    std::vector<BigInt> c;
    c.reserve(g.c.size());
    for (const auto& x : g.c) c.push_back(x.mod(m_));
    c.resize(std::max(c.size(), static_cast<size_t>(n_)), BigInt(0));
    reduce_in_place(c);
    c.resize(static_cast<size_t>(n_), BigInt(0));
    return c;
}

Poly<ZRing> PolyQuotCtx::to_poly(const Elem& a) const {
    ZRing ZZ;
    Poly<ZRing> f;
    f.c = a;
    poly_normalize(ZZ, f);
    return f;
}

bool PolyQuotCtx::is_zero(const Elem& a) const {
    for (const auto& c : a)
        if (!c.is_zero()) return false;
    return true;
}

bool PolyQuotCtx::eq(const Elem& a, const Elem& b) const {
    for (int i = 0; i < n_; ++i)
        if (a[static_cast<size_t>(i)] != b[static_cast<size_t>(i)]) return false;
    return true;
}

int PolyQuotCtx::elem_deg(const Elem& a) const {
    for (int i = n_ - 1; i >= 0; --i)
        if (!a[static_cast<size_t>(i)].is_zero()) return i;
    return -1;
}

PolyQuotCtx::Elem PolyQuotCtx::add(const Elem& a, const Elem& b) const {
    Elem r(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        BigInt s = a[static_cast<size_t>(i)] + b[static_cast<size_t>(i)];
        if (s >= m_) s -= m_;
        r[static_cast<size_t>(i)] = std::move(s);
    }
    return r;
}

PolyQuotCtx::Elem PolyQuotCtx::sub(const Elem& a, const Elem& b) const {
    Elem r(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        BigInt s = a[static_cast<size_t>(i)] - b[static_cast<size_t>(i)];
        if (s.sign() < 0) s += m_;
        r[static_cast<size_t>(i)] = std::move(s);
    }
    return r;
}

PolyQuotCtx::Elem PolyQuotCtx::neg(const Elem& a) const {
    Elem r(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i)
        r[static_cast<size_t>(i)] =
            a[static_cast<size_t>(i)].is_zero() ? BigInt(0) : m_ - a[static_cast<size_t>(i)];
    return r;
}

void PolyQuotCtx::add_assign(Elem& a, const Elem& b) const {
    for (int i = 0; i < n_; ++i) {
        a[static_cast<size_t>(i)] += b[static_cast<size_t>(i)];
        if (a[static_cast<size_t>(i)] >= m_) a[static_cast<size_t>(i)] -= m_;
    }
}

void PolyQuotCtx::addmul_scalar(Elem& a, const Elem& b, const BigInt& s) const {
    for (int i = 0; i < n_; ++i) {
        a[static_cast<size_t>(i)].addmul(b[static_cast<size_t>(i)], s);
        a[static_cast<size_t>(i)] = a[static_cast<size_t>(i)].mod(m_);
    }
}

PolyQuotCtx::Elem PolyQuotCtx::mul_scalar(const Elem& a, const BigInt& s) const {
    Elem r(static_cast<size_t>(n_));
    BigInt sr = s.mod(m_);
    for (int i = 0; i < n_; ++i) r[static_cast<size_t>(i)] = (a[static_cast<size_t>(i)] * sr).mod(m_);
    return r;
}

// Cascade elimination of degrees 2n-2 .. n. Each pivot is reduced mod m before
// use so intermediate coefficients stay near m^2 regardless of chain length.
void PolyQuotCtx::reduce_in_place(std::vector<BigInt>& c) const {
    for (size_t i = c.size(); i-- > static_cast<size_t>(n_);) {
        BigInt q = c[i].mod(m_);
        c[i] = BigInt(0);
        if (q.is_zero()) continue;
        size_t base = i - static_cast<size_t>(n_);
        for (int j = 0; j < n_; ++j) {
            if (Fred_[static_cast<size_t>(j)].is_zero()) continue;
            c[base + static_cast<size_t>(j)].submul(q, Fred_[static_cast<size_t>(j)]);
        }
    }
    for (size_t i = 0; i < static_cast<size_t>(n_) && i < c.size(); ++i) c[i] = c[i].mod(m_);
}

PolyQuotCtx::Elem PolyQuotCtx::mul_schoolbook(const Elem& a, const Elem& b) const {
    std::vector<BigInt> prod(static_cast<size_t>(2 * n_ - 1));
    for (int i = 0; i < n_; ++i) {
        if (a[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; j < n_; ++j)
            prod[static_cast<size_t>(i + j)].addmul(a[static_cast<size_t>(i)], b[static_cast<size_t>(j)]);
    }
    reduce_in_place(prod);
    prod.resize(static_cast<size_t>(n_), BigInt(0));
    return prod;
}

PolyQuotCtx::Elem PolyQuotCtx::mul(const Elem& a, const Elem& b) const {
    if (!use_kronecker_) return mul_schoolbook(a, b);

    // pack coefficients (canonical, nonnegative) into fixed limb-aligned slots
    const size_t slots = static_cast<size_t>(n_);
    const size_t total = slots * slot_limbs_;
    std::vector<mp_limb_t> abuf(total, 0), bbuf(total, 0);
    auto pack = [&](const Elem& src, std::vector<mp_limb_t>& dst) {
        for (size_t i = 0; i < slots; ++i) {
            const mpz_srcptr z = src[i].raw();
            size_t ln = mpz_size(z);
            if (ln > slot_limbs_) throw std::logic_error("PolyQuotCtx: slot overflow");
            for (size_t k = 0; k < ln; ++k) dst[i * slot_limbs_ + k] = mpz_getlimbn(z, static_cast<mp_size_t>(k));
        }
    };
    pack(a, abuf);
    pack(b, bbuf);

    BigInt A, B;
    mpz_import(A.raw(), total, -1, sizeof(mp_limb_t), 0, 0, abuf.data());
    mpz_import(B.raw(), total, -1, sizeof(mp_limb_t), 0, 0, bbuf.data());
    BigInt P = A * B;

    // unpack 2n-1 slots
    std::vector<BigInt> prod(static_cast<size_t>(2 * n_ - 1));
    size_t plimbs = mpz_size(P.raw());
    std::vector<mp_limb_t> pbuf(std::max(plimbs, (2 * slots - 1) * slot_limbs_), 0);
    mpz_export(pbuf.data(), nullptr, -1, sizeof(mp_limb_t), 0, 0, P.raw());
    for (size_t i = 0; i < prod.size(); ++i) {
        mpz_import(prod[i].raw(), slot_limbs_, -1, sizeof(mp_limb_t), 0, 0,
                   pbuf.data() + i * slot_limbs_);
    }
    reduce_in_place(prod);
    prod.resize(static_cast<size_t>(n_), BigInt(0));
    return prod;
}

PolyQuotCtx::Elem PolyQuotCtx::eval_zpoly(const Poly<ZRing>& g, const Elem& a) const {
    Elem acc = zero();
    for (int i = g.deg(); i >= 0; --i) {
        acc = mul(acc, a);
        acc[0] += g.c[static_cast<size_t>(i)].mod(m_);
        if (acc[0] >= m_) acc[0] -= m_;
    }
    return acc;
}

PolyQuotCtx::Elem PolyQuotCtx::pow(const Elem& a, const BigInt& e) const {
    if (e.sign() < 0) throw std::domain_error("PolyQuotCtx::pow: negative exponent");
    Elem acc = one();
    size_t nb = e.bits();
    for (size_t i = nb; i-- > 0;) {
        acc = mul(acc, acc);
        if (mpz_tstbit(e.raw(), i)) acc = mul(acc, a);
    }
    return acc;
}

PolyQuotCtx::Elem PolyQuotCtx::pow_gen(const BigInt& e) const {
    if (e.sign() < 0) throw std::domain_error("PolyQuotCtx::pow_gen: negative exponent");
    if (e.is_zero()) return one();
    Elem acc = gen();
    auto mul_by_gen = [&](Elem& x) {
        // shift and eliminate the single overflowing degree
        std::vector<BigInt> c(static_cast<size_t>(n_) + 1);
        for (int i = 0; i < n_; ++i) c[static_cast<size_t>(i + 1)] = x[static_cast<size_t>(i)];
        reduce_in_place(c);
        c.resize(static_cast<size_t>(n_), BigInt(0));
        x = std::move(c);
    };
    size_t nb = e.bits();
    for (size_t i = nb - 1; i-- > 0;) {
        acc = mul(acc, acc);
        if (mpz_tstbit(e.raw(), i)) mul_by_gen(acc);
    }
    return acc;
}

BigInt PolyQuotCtx::trace(const Elem& a) const {
    if (powsums_.empty()) {
        // power sums of F's roots mod m; division-free Newton identities
        powsums_.resize(static_cast<size_t>(n_));
        powsums_[0] = BigInt(static_cast<long>(n_)).mod(m_);
        for (int j = 1; j < n_; ++j) {
            BigInt s(0);
            for (int i = 1; i < j; ++i)
                s.addmul(Fred_[static_cast<size_t>(n_ - i)], powsums_[static_cast<size_t>(j - i)]);
            s.addmul(BigInt(static_cast<long>(j)), Fred_[static_cast<size_t>(n_ - j)]);
            powsums_[static_cast<size_t>(j)] = (-s).mod(m_);
        }
    }
    BigInt t(0);
    for (int i = 0; i < n_; ++i) t.addmul(a[static_cast<size_t>(i)], powsums_[static_cast<size_t>(i)]);
    return t.mod(m_);
}

PolyQuotCtx::Elem PolyQuotCtx::invert(const Elem& a) const {
    ZModRing R(m_);
    Poly<ZModRing> fa;
    fa.c = a;
    poly_normalize(R, fa);
    Poly<ZModRing> fm;
    fm.c.reserve(static_cast<size_t>(n_) + 1);
    for (int i = 0; i < n_; ++i) fm.c.push_back(Fred_[static_cast<size_t>(i)]);
    fm.c.push_back(BigInt(1).mod(m_));
    // extended euclid
    Poly<ZModRing> r0 = fm, r1 = fa;
    Poly<ZModRing> t0 = poly_zero(R), t1 = poly_one(R);
    while (!r1.is_zero() && r1.deg() > 0) {
        auto qr = poly_divrem(R, r0, r1);
        Poly<ZModRing> r2 = qr.second;
        Poly<ZModRing> t2 = poly_sub(R, t0, poly_mul(R, qr.first, t1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r1.is_zero()) throw std::domain_error("PolyQuotCtx::invert: not invertible");
    BigInt ci;
    if (!R.invert(ci, r1.c[0])) throw std::domain_error("PolyQuotCtx::invert: not invertible");
    Poly<ZModRing> inv = poly_scale(R, t1, ci);
    Elem out(static_cast<size_t>(n_));
    for (int i = 0; i <= inv.deg(); ++i) out[static_cast<size_t>(i)] = inv.c[static_cast<size_t>(i)];
    return out;
}

}  // namespace galrep
