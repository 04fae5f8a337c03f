#include "galrep/bigint.hpp"

#include <stdexcept>

namespace galrep {

BigInt symmetric_mod(const BigInt& x, const BigInt& m) {
    BigInt r = x.mod(m);
    BigInt twice = r + r;
    if (twice > m) r -= m;
    return r;
}

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

uint64_t invmod_u64(uint64_t a, uint64_t m) {
    // extended Euclid on signed 128-bit intermediates
    __int128 t = 0, newt = 1;
    __int128 r = m, newr = a % m;
    while (newr != 0) {
        __int128 q = r / newr;
        __int128 tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw std::domain_error("invmod_u64: not invertible");
    if (t < 0) t += m;
    return static_cast<uint64_t>(t);
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic base set for 64-bit inputs (Sinclair)
    for (uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
        uint64_t x = powmod_u64(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

uint64_t next_prime_u64(uint64_t n) {
    uint64_t c = n + 1;
    if (c <= 2) return 2;
    if ((c & 1) == 0) ++c;
    while (!is_prime_u64(c)) c += 2;
    return c;
}

namespace {

bool strong_fermat(const BigInt& n, unsigned long base, const BigInt& d, unsigned long s) {
    BigInt a(static_cast<long>(base));
    BigInt x = powmod(a, d, n);
    BigInt nm1 = n - BigInt(1);
    if (x.is_one() || x == nm1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x).mod(n);
        if (x == nm1) return true;
    }
    return false;
}

// Strong Lucas probable-prime test with Selfridge's parameter choice.
bool strong_lucas(const BigInt& n) {
    // find D = 5, -7, 9, -11, ... with jacobi(D, n) = -1
    long dmag = 5;
    int sign = 1;
    BigInt D;
    while (true) {
        D = BigInt(sign * dmag);
        int j = mpz_jacobi(D.raw(), n.raw());
        if (j == 0) return false;  // proper factor found
        if (j == -1) break;
        dmag += 2;
        sign = -sign;
        if (dmag > 1000) {
            // n is a perfect square (or absurdly unlucky); squares are composite here
            if (is_perfect_square(n)) return false;
        }
    }
    // P = 1, Q = (1 - D)/4
    BigInt Q = (BigInt(1) - D) / BigInt(4);
    BigInt d = n + BigInt(1);
    unsigned long s = 0;
    while (!d.odd()) {
        d = d / BigInt(2);
        ++s;
    }
    // Lucas chain for U_d, V_d by binary expansion of d
    BigInt U(0), V(2), Qk(1);
    size_t nbits = d.bits();
    for (size_t i = nbits; i-- > 0;) {
        // double: U_{2k} = U V, V_{2k} = V^2 - 2 Q^k
        U = (U * V).mod(n);
        V = (V * V - Qk - Qk).mod(n);
        Qk = (Qk * Qk).mod(n);
        if (mpz_tstbit(d.raw(), i)) {
            // add one: U' = (P U + V)/2, V' = (D U + P V)/2 with P = 1
            BigInt U2 = U + V;
            BigInt V2 = D * U + V;
            if (U2.odd()) U2 += n;
            if (V2.odd()) V2 += n;
            U = (U2 / BigInt(2)).mod(n);
            V = (V2 / BigInt(2)).mod(n);
            Qk = (Qk * Q).mod(n);
        }
    }
    if (U.is_zero() || V.is_zero()) return true;
    for (unsigned long i = 1; i < s; ++i) {
        V = (V * V - Qk - Qk).mod(n);
        if (V.is_zero()) return true;
        Qk = (Qk * Qk).mod(n);
    }
    return false;
}

constexpr unsigned long kMrBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

bool is_probable_prime(const BigInt& n) {
    if (n.sign() <= 0) return false;
    if (n.fits_slong() && static_cast<uint64_t>(n.to_long()) < (1ull << 62))
        return is_prime_u64(static_cast<uint64_t>(n.to_long()));
    for (unsigned long p : {2ul, 3ul,  5ul,  7ul,  11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul,
                            41ul, 43ul, 47ul, 53ul, 59ul, 61ul, 67ul, 71ul, 73ul, 79ul, 83ul, 89ul, 97ul}) {
        if (mpz_divisible_ui_p(n.raw(), p)) return false;
    }
    BigInt d = n - BigInt(1);
    unsigned long s = 0;
    while (!d.odd()) {
        d = d / BigInt(2);
        ++s;
    }
    for (unsigned long b : kMrBases) {
        if (!strong_fermat(n, b, d, s)) return false;
    }
    return strong_lucas(n);
}

BigInt next_probable_prime(const BigInt& n) {
    BigInt c = n + BigInt(1);
    if (c <= BigInt(2)) return BigInt(2);
    if (!c.odd()) c += BigInt(1);
    // wheel over residues coprime to 2*3*5*7 would be possible; the base-2 test
    // below already rejects nearly everything the trial division lets through
    while (true) {
        if (is_probable_prime(c)) return c;
        c += BigInt(2);
    }
}

SquarePartSplit square_part_split(const BigInt& n, unsigned long ell, unsigned long trial_bound) {
    if (n.is_zero()) throw std::domain_error("square_part_split: n = 0");
    SquarePartSplit out;
    out.sign = n.sign();
    BigInt rest = n.abs();
    BigInt lp(static_cast<long>(ell));
    while (rest.divisible_by(lp)) {
        rest = rest.divexact(lp);
        ++out.ell_exp;
    }
    if (is_perfect_square(rest)) {
        out.ok = true;
        out.root = isqrt(rest);
        return out;
    }
    // find the smallest prime with odd valuation under the trial bound
    uint64_t q = 2;
    while (q <= trial_bound && rest > BigInt(1)) {
        if (mpz_divisible_ui_p(rest.raw(), q)) {
            unsigned long e = 0;
            BigInt qb(static_cast<long>(q));
            while (rest.divisible_by(qb)) {
                rest = rest.divexact(qb);
                ++e;
            }
            if (e % 2 == 1) {
                out.obstruction = qb;
                return out;
            }
        }
        q = next_prime_u64(q);
    }
    // no small odd-valuation prime: the remaining cofactor is the obstruction
    out.obstruction = rest;
    return out;
}

BigInt crt_pair(const BigInt& a1, const BigInt& m1, const BigInt& a2, const BigInt& m2) {
    auto inv = invmod(m1, m2);
    if (!inv) throw std::domain_error("crt_pair: moduli not coprime");
    BigInt t = ((a2 - a1) * (*inv)).mod(m2);
    return (a1 + m1 * t).mod(m1 * m2);
}

uint64_t WordPrimePool::prime(size_t i) {
    while (primes_.size() <= i) {
        uint64_t from = primes_.empty() ? (1ull << 62) : primes_.back();
        // walk downward so products with 62-bit operands stay in range
        uint64_t c = from - 1;
        while (!is_prime_u64(c)) --c;
        primes_.push_back(c);
    }
    return primes_[i];
}

}  // namespace galrep
