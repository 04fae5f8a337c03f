#include "galrep/modforms.hpp"

#include <gmp.h>

#include <algorithm>
#include <stdexcept>

namespace galrep {

QuadElem QuadElem::inverse() const {
    // N(a + b alpha) = (a + b alpha)(a + b - b alpha) = a^2 + ab - 36042 b^2
    BigRat n = a * a + a * b - BigRat(36042L) * (b * b);
    if (n.is_zero()) throw std::domain_error("QuadElem: not invertible");
    QuadElem cj = conj();
    return {cj.a / n, cj.b / n};
}

namespace {

constexpr size_t kLimbBits = GMP_NUMB_BITS;

// single nonnegative Kronecker product: c = a * b as packed integers
std::vector<BigInt> kronecker_mul_nonneg(const std::vector<BigInt>& a, const std::vector<BigInt>& b,
                                         size_t out_len, size_t slot_limbs) {
    auto pack = [&](const std::vector<BigInt>& src) {
        std::vector<mp_limb_t> buf(src.size() * slot_limbs, 0);
        for (size_t i = 0; i < src.size(); ++i) {
            const mpz_srcptr z = src[i].raw();
            size_t ln = mpz_size(z);
            for (size_t k = 0; k < ln; ++k)
                buf[i * slot_limbs + k] = mpz_getlimbn(z, static_cast<mp_size_t>(k));
        }
        BigInt out;
        mpz_import(out.raw(), buf.size(), -1, sizeof(mp_limb_t), 0, 0, buf.data());
        return out;
    };
    BigInt P = pack(a) * pack(b);
    std::vector<BigInt> c(out_len);
    size_t plimbs = mpz_size(P.raw());
    std::vector<mp_limb_t> pbuf(std::max(plimbs, out_len * slot_limbs), 0);
    mpz_export(pbuf.data(), nullptr, -1, sizeof(mp_limb_t), 0, 0, P.raw());
    for (size_t i = 0; i < out_len; ++i)
        mpz_import(c[i].raw(), slot_limbs, -1, sizeof(mp_limb_t), 0, 0, pbuf.data() + i * slot_limbs);
    return c;
}

}  // namespace

QSeries mul_series(const QSeries& f, const QSeries& g) {
    int T = std::min(f.truncation(), g.truncation());
    QSeries out;
    out.a.assign(static_cast<size_t>(T) + 1, BigInt(0));
    if (T < 512) {  // schoolbook for short series
        for (int i = 0; i <= T; ++i) {
            if (f.a[static_cast<size_t>(i)].is_zero()) continue;
            for (int j = 0; i + j <= T; ++j)
                out.a[static_cast<size_t>(i + j)].addmul(f.a[static_cast<size_t>(i)],
                                                         g.a[static_cast<size_t>(j)]);
        }
        return out;
    }
    // Kronecker with sign splitting: f = f+ - f-, g = g+ - g-
    size_t n = static_cast<size_t>(T) + 1;
    std::vector<BigInt> fp(n), fm(n), gp(n), gm(n);
    size_t maxbits = 1;
    for (size_t i = 0; i < n; ++i) {
        (f.a[i].sign() >= 0 ? fp : fm)[i] = f.a[i].abs();
        (g.a[i].sign() >= 0 ? gp : gm)[i] = g.a[i].abs();
        maxbits = std::max({maxbits, f.a[i].bits(), g.a[i].bits()});
    }
    size_t slot_bits = 2 * maxbits + 64;
    size_t slot_limbs = (slot_bits + kLimbBits - 1) / kLimbBits;
    auto pp = kronecker_mul_nonneg(fp, gp, n, slot_limbs);
    auto mm = kronecker_mul_nonneg(fm, gm, n, slot_limbs);
    auto pm = kronecker_mul_nonneg(fp, gm, n, slot_limbs);
    auto mp = kronecker_mul_nonneg(fm, gp, n, slot_limbs);
    for (size_t i = 0; i < n; ++i) out.a[i] = pp[i] + mm[i] - pm[i] - mp[i];
    return out;
}

QSeries eisenstein(int k, int T) {
    if (k != 4 && k != 6) throw std::domain_error("eisenstein: k must be 4 or 6");
    if (T < 0) throw std::domain_error("eisenstein: T >= 0");
    QSeries e;
    e.a.assign(static_cast<size_t>(T) + 1, BigInt(0));
    e.a[0] = BigInt(1);
    unsigned long power = (k == 4) ? 3 : 5;
    long scale = (k == 4) ? 240 : -504;
    // divisor-power sieve for sigma_{k-1}
    for (long d = 1; d <= T; ++d) {
        BigInt dk = pow(BigInt(d), power) * BigInt(scale);
        for (long m = d; m <= T; m += d) e.a[static_cast<size_t>(m)] += dk;
    }
    return e;
}

QSeries delta(int T) {
    if (T < 1) throw std::domain_error("delta: T >= 1");
    QSeries e4 = eisenstein(4, T);
    QSeries e6 = eisenstein(6, T);
    QSeries e4sq = mul_series(e4, e4);
    QSeries e4cube = mul_series(e4sq, e4);
    QSeries e6sq = mul_series(e6, e6);
    QSeries d;
    d.a.assign(static_cast<size_t>(T) + 1, BigInt(0));
    BigInt sc(1728);
    for (size_t i = 0; i < d.a.size(); ++i) d.a[i] = (e4cube.a[i] - e6sq.a[i]).divexact(sc);
    return d;
}

QSeries delta_product_formula(int T) {
    if (T < 1) throw std::domain_error("delta_product_formula: T >= 1");
    // eta-without-q^{1/24}: prod (1 - q^n) = sum_k (-1)^k q^{k(3k-1)/2}
    QSeries eta;
    eta.a.assign(static_cast<size_t>(T) + 1, BigInt(0));
    for (long k = 0;; ++k) {
        long g1 = k * (3 * k - 1) / 2;
        long g2 = k * (3 * k + 1) / 2;
        if (g1 > T && g2 > T) break;
        long s = (k % 2 == 0) ? 1 : -1;
        if (g1 <= T) eta.a[static_cast<size_t>(g1)] += BigInt(s);
        if (k > 0 && g2 <= T) eta.a[static_cast<size_t>(g2)] += BigInt(s);
    }
    // eta^24 = ((eta^2)^2 * eta^2)^4? use chain: e2=eta^2, e3=e2*eta, e6=e3^2, e12=e6^2, e24=e12^2
    QSeries e2 = mul_series(eta, eta);
    QSeries e3 = mul_series(e2, eta);
    QSeries e6 = mul_series(e3, e3);
    QSeries e12 = mul_series(e6, e6);
    QSeries e24 = mul_series(e12, e12);
    // Delta = q * e24
    QSeries d;
    d.a.assign(static_cast<size_t>(T) + 1, BigInt(0));
    for (long n = 1; n <= T; ++n) d.a[static_cast<size_t>(n)] = e24.a[static_cast<size_t>(n - 1)];
    return d;
}

QSeries eigenform(int k, int T) {
    switch (k) {
        case 12:
            return delta(T);
        case 16: {
            return mul_series(eisenstein(4, T), delta(T));
        }
        case 18:
            return mul_series(eisenstein(6, T), delta(T));
        case 20: {
            QSeries e4 = eisenstein(4, T);
            return mul_series(mul_series(e4, e4), delta(T));
        }
        case 22:
            return mul_series(mul_series(eisenstein(4, T), eisenstein(6, T)), delta(T));
        case 26: {
            QSeries e4 = eisenstein(4, T);
            QSeries e8 = mul_series(e4, e4);
            return mul_series(mul_series(e8, eisenstein(6, T)), delta(T));
        }
        default:
            throw std::domain_error("eigenform: unsupported weight");
    }
}

namespace {

// coefficient of T_2 f at q^n for weight 24: a(2n) + 2^23 a(n/2)
BigInt t2_coeff(const QSeries& f, long n) {
    BigInt v = f.a[static_cast<size_t>(2 * n)];
    if (n % 2 == 0) v += pow2(23) * f.a[static_cast<size_t>(n / 2)];
    return v;
}

}  // namespace

std::pair<BigInt, BigInt> s24_t2_charpoly_coeffs() {
    // basis g1 = E4^3 Delta = q + ..., g2 = Delta^2 = q^2 + ...
    int T = 16;
    QSeries e4 = eisenstein(4, T);
    QSeries e4cube = mul_series(mul_series(e4, e4), e4);
    QSeries d = delta(T);
    QSeries g1 = mul_series(e4cube, d);
    QSeries g2 = mul_series(d, d);
    // T2 g_i = m1i g1 + m2i g2 via the q^1, q^2 coefficients
    BigInt m11 = t2_coeff(g1, 1);
    BigInt m12 = t2_coeff(g2, 1);
    BigInt m21 = t2_coeff(g1, 2) - m11 * g1.a[2];
    BigInt m22 = t2_coeff(g2, 2) - m12 * g1.a[2];
    return {m11 + m22, m11 * m22 - m12 * m21};
}

QSeriesQuad s24_eigenform(int T) {
    if (T < 2) throw std::domain_error("s24_eigenform: T >= 2");
    QSeries e4 = eisenstein(4, T);
    QSeries e4cube = mul_series(mul_series(e4, e4), e4);
    QSeries d = delta(T);
    QSeries g1 = mul_series(e4cube, d);
    QSeries g2 = mul_series(d, d);
    // eigenvalue lambda = 528 + 24 alpha; f = g1 + c g2 with c = lambda - a_2(g1)
    QuadElem lambda{BigRat(528L), BigRat(24L)};
    QuadElem c = lambda - QuadElem{BigRat(g1.a[2]), BigRat(0L)};
    if (!c.is_integral()) throw std::logic_error("s24_eigenform: non-integral eigenvector");
    QSeriesQuad f;
    f.x.assign(static_cast<size_t>(T) + 1, BigInt(0));
    f.y.assign(static_cast<size_t>(T) + 1, BigInt(0));
    BigInt cx = c.a.num(), cy = c.b.num();
    for (long n = 0; n <= T; ++n) {
        f.x[static_cast<size_t>(n)] = g1.a[static_cast<size_t>(n)] + cx * g2.a[static_cast<size_t>(n)];
        f.y[static_cast<size_t>(n)] = cy * g2.a[static_cast<size_t>(n)];
    }
    // eigenvector identity at every computed index: a(2n) + 2^23 a(n/2) = lambda a(n)
    BigInt p23 = pow2(23);
    for (long n = 1; 2 * n <= T; ++n) {
        BigInt lx = f.x[static_cast<size_t>(2 * n)];
        BigInt ly = f.y[static_cast<size_t>(2 * n)];
        if (n % 2 == 0) {
            lx += p23 * f.x[static_cast<size_t>(n / 2)];
            ly += p23 * f.y[static_cast<size_t>(n / 2)];
        }
        // lambda * (x + y alpha) = 528 x + 24*36042 y + (24 x + 552 y) alpha
        BigInt ex = BigInt(528) * f.x[static_cast<size_t>(n)] + BigInt(24) * BigInt(36042) * f.y[static_cast<size_t>(n)];
        BigInt ey = BigInt(24) * f.x[static_cast<size_t>(n)] + BigInt(552) * f.y[static_cast<size_t>(n)];
        if (lx != ex || ly != ey) throw std::logic_error("s24_eigenform: not a T2 eigenvector");
    }
    return f;
}

std::pair<uint64_t, uint64_t> crt_combine(uint64_t t5, uint64_t t27) {
    // b = (t27 - t5) * 22^{-1}, a = t5 - 5 b (mod 31); 22^{-1} = 24
    uint64_t diff = (t27 + 31 - (t5 % 31)) % 31;
    uint64_t b = (diff * 24) % 31;
    uint64_t a = (t5 % 31 + 31 - (5 * b) % 31) % 31;
    return {a, b};
}

const QSeries& ModformsOracle::form(int k) const {
    auto it = forms_.find(k);
    if (it != forms_.end()) return it->second;
    return forms_.emplace(k, eigenform(k, T_)).first->second;
}

const QSeriesQuad& ModformsOracle::form24() const {
    if (f24_.x.empty()) f24_ = s24_eigenform(T_);
    return f24_;
}

const BigInt& ModformsOracle::tau(int k, long n) const {
    const QSeries& f = form(k);
    if (n < 0 || n > f.truncation()) throw std::out_of_range("ModformsOracle: n beyond truncation");
    return f.a[static_cast<size_t>(n)];
}

uint64_t ModformsOracle::tau_mod(int k, long n, uint64_t ell, int embedding) const {
    if (k == 24) {
        if (ell != 31 || (embedding != 5 && embedding != 27))
            throw std::domain_error("tau_mod: weight 24 needs ell = 31 and embedding 5 or 27");
        const QSeriesQuad& f = form24();
        if (n < 0 || n > f.truncation()) throw std::out_of_range("ModformsOracle: n beyond truncation");
        uint64_t x = mpz_fdiv_ui(f.x[static_cast<size_t>(n)].raw(), ell);
        uint64_t y = mpz_fdiv_ui(f.y[static_cast<size_t>(n)].raw(), ell);
        return (x + y * static_cast<uint64_t>(embedding)) % ell;
    }
    return mpz_fdiv_ui(tau(k, n).raw(), ell);
}

}  // namespace galrep
