#ifndef GALREP_BIGINT_HPP
#define GALREP_BIGINT_HPP

/* Thin value-semantic wrappers around GMP's mpz_t / mpq_t, plus the scalar
 * number theory used throughout: deterministic primality, residue helpers,
 * integer square parts. All heavy lifting stays in GMP. */

#include <gmp.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace galrep {

class BigInt {
  public:
    BigInt() { mpz_init(z_); }
    BigInt(long v) { mpz_init_set_si(z_, v); }
    BigInt(unsigned long v) { mpz_init_set_ui(z_, v); }
    BigInt(int v) { mpz_init_set_si(z_, v); }
    explicit BigInt(const std::string& dec) {
        if (mpz_init_set_str(z_, dec.c_str(), 10) != 0) {
            mpz_clear(z_);
            throw std::invalid_argument("BigInt: bad decimal literal: " + dec);
        }
    }
    BigInt(const BigInt& o) { mpz_init_set(z_, o.z_); }
    BigInt(BigInt&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    BigInt& operator=(const BigInt& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    BigInt& operator=(BigInt&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~BigInt() { mpz_clear(z_); }

    mpz_ptr raw() { return z_; }
    mpz_srcptr raw() const { return z_; }

    int sign() const { return mpz_sgn(z_); }
    bool is_zero() const { return mpz_sgn(z_) == 0; }
    bool is_one() const { return mpz_cmp_ui(z_, 1) == 0; }
    bool odd() const { return mpz_odd_p(z_) != 0; }
    size_t bits() const { return is_zero() ? 0 : mpz_sizeinbase(z_, 2); }
    bool fits_slong() const { return mpz_fits_slong_p(z_) != 0; }
    long to_long() const { return mpz_get_si(z_); }
    unsigned long to_ulong() const { return mpz_get_ui(z_); }
    std::string str() const {
        char* s = mpz_get_str(nullptr, 10, z_);
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }

    BigInt operator-() const {
        BigInt r;
        mpz_neg(r.z_, z_);
        return r;
    }
    BigInt operator+(const BigInt& o) const {
        BigInt r;
        mpz_add(r.z_, z_, o.z_);
        return r;
    }
    BigInt operator-(const BigInt& o) const {
        BigInt r;
        mpz_sub(r.z_, z_, o.z_);
        return r;
    }
    BigInt operator*(const BigInt& o) const {
        BigInt r;
        mpz_mul(r.z_, z_, o.z_);
        return r;
    }
    BigInt& operator+=(const BigInt& o) {
        mpz_add(z_, z_, o.z_);
        return *this;
    }
    BigInt& operator-=(const BigInt& o) {
        mpz_sub(z_, z_, o.z_);
        return *this;
    }
    BigInt& operator*=(const BigInt& o) {
        mpz_mul(z_, z_, o.z_);
        return *this;
    }
    BigInt& operator<<=(unsigned long k) {
        mpz_mul_2exp(z_, z_, k);
        return *this;
    }

    // *this += a*b  (fused, no temporary)
    void addmul(const BigInt& a, const BigInt& b) { mpz_addmul(z_, a.z_, b.z_); }
    void submul(const BigInt& a, const BigInt& b) { mpz_submul(z_, a.z_, b.z_); }

    // truncated division (sign follows C semantics); use mod() for canonical residues
    BigInt operator/(const BigInt& o) const {
        BigInt r;
        mpz_tdiv_q(r.z_, z_, o.z_);
        return r;
    }
    BigInt operator%(const BigInt& o) const {
        BigInt r;
        mpz_tdiv_r(r.z_, z_, o.z_);
        return r;
    }
    // canonical residue in [0, m)
    BigInt mod(const BigInt& m) const {
        BigInt r;
        mpz_mod(r.z_, z_, m.z_);
        return r;
    }
    bool divisible_by(const BigInt& d) const { return mpz_divisible_p(z_, d.z_) != 0; }
    BigInt divexact(const BigInt& d) const {
        BigInt r;
        mpz_divexact(r.z_, z_, d.z_);
        return r;
    }

    BigInt abs() const {
        BigInt r;
        mpz_abs(r.z_, z_);
        return r;
    }

    int cmp(const BigInt& o) const { return mpz_cmp(z_, o.z_); }
    bool operator==(const BigInt& o) const { return cmp(o) == 0; }
    bool operator!=(const BigInt& o) const { return cmp(o) != 0; }
    bool operator<(const BigInt& o) const { return cmp(o) < 0; }
    bool operator<=(const BigInt& o) const { return cmp(o) <= 0; }
    bool operator>(const BigInt& o) const { return cmp(o) > 0; }
    bool operator>=(const BigInt& o) const { return cmp(o) >= 0; }
    bool operator==(long v) const { return mpz_cmp_si(z_, v) == 0; }
    bool operator!=(long v) const { return mpz_cmp_si(z_, v) != 0; }

    friend void swap(BigInt& a, BigInt& b) { mpz_swap(a.z_, b.z_); }

  private:
    mpz_t z_;
};

inline std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.str(); }

/* Exact rational, always in lowest terms with positive denominator
 * (mpq_canonicalize maintains the invariant). */
class BigRat {
  public:
    BigRat() { mpq_init(q_); }
    BigRat(long v) {
        mpq_init(q_);
        mpq_set_si(q_, v, 1);
    }
    BigRat(const BigInt& n) {
        mpq_init(q_);
        mpq_set_z(q_, n.raw());
    }
    BigRat(const BigInt& n, const BigInt& d) {
        if (d.is_zero()) throw std::domain_error("BigRat: zero denominator");
        mpq_init(q_);
        mpz_set(mpq_numref(q_), n.raw());
        mpz_set(mpq_denref(q_), d.raw());
        mpq_canonicalize(q_);
    }
    BigRat(const BigRat& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    BigRat(BigRat&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    BigRat& operator=(const BigRat& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    BigRat& operator=(BigRat&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~BigRat() { mpq_clear(q_); }

    mpq_ptr raw() { return q_; }
    mpq_srcptr raw() const { return q_; }

    BigInt num() const {
        BigInt r;
        mpz_set(r.raw(), mpq_numref(q_));
        return r;
    }
    BigInt den() const {
        BigInt r;
        mpz_set(r.raw(), mpq_denref(q_));
        return r;
    }
    int sign() const { return mpq_sgn(q_); }
    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

    BigRat operator-() const {
        BigRat r;
        mpq_neg(r.q_, q_);
        return r;
    }
    BigRat operator+(const BigRat& o) const {
        BigRat r;
        mpq_add(r.q_, q_, o.q_);
        return r;
    }
    BigRat operator-(const BigRat& o) const {
        BigRat r;
        mpq_sub(r.q_, q_, o.q_);
        return r;
    }
    BigRat operator*(const BigRat& o) const {
        BigRat r;
        mpq_mul(r.q_, q_, o.q_);
        return r;
    }
    BigRat operator/(const BigRat& o) const {
        if (o.is_zero()) throw std::domain_error("BigRat: division by zero");
        BigRat r;
        mpq_div(r.q_, q_, o.q_);
        return r;
    }
    BigRat& operator+=(const BigRat& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    BigRat& operator-=(const BigRat& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    BigRat& operator*=(const BigRat& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }

    int cmp(const BigRat& o) const { return mpq_cmp(q_, o.q_); }
    bool operator==(const BigRat& o) const { return mpq_equal(q_, o.q_) != 0; }
    bool operator!=(const BigRat& o) const { return !(*this == o); }
    bool operator<(const BigRat& o) const { return cmp(o) < 0; }
    bool operator<=(const BigRat& o) const { return cmp(o) <= 0; }
    bool operator>(const BigRat& o) const { return cmp(o) > 0; }
    bool operator>=(const BigRat& o) const { return cmp(o) >= 0; }

    std::string str() const {
        if (is_integer()) return num().str();
        return num().str() + "/" + den().str();
    }

    friend void swap(BigRat& a, BigRat& b) { mpq_swap(a.q_, b.q_); }

  private:
    mpq_t q_;
};

inline std::ostream& operator<<(std::ostream& os, const BigRat& v) { return os << v.str(); }

inline BigInt operator*(long a, const BigInt& b) { return BigInt(a) * b; }

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.raw(), a.raw(), b.raw());
    return r;
}

inline BigInt pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.raw(), base.raw(), e);
    return r;
}

inline BigInt pow2(unsigned long e) {
    BigInt r(1);
    r <<= e;
    return r;
}

inline BigInt powmod(const BigInt& base, const BigInt& e, const BigInt& m) {
    BigInt r;
    mpz_powm(r.raw(), base.raw(), e.raw(), m.raw());
    return r;
}

inline std::optional<BigInt> invmod(const BigInt& a, const BigInt& m) {
    BigInt r;
    if (mpz_invert(r.raw(), a.raw(), m.raw()) == 0) return std::nullopt;
    return r;
}

inline BigInt isqrt(const BigInt& n) {
    BigInt r;
    mpz_sqrt(r.raw(), n.raw());
    return r;
}

inline bool is_perfect_square(const BigInt& n) {
    return n.sign() >= 0 && mpz_perfect_square_p(n.raw()) != 0;
}

// symmetric representative of x mod m in (-m/2, m/2]
BigInt symmetric_mod(const BigInt& x, const BigInt& m);

// ---- word-size arithmetic -------------------------------------------------

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m);
uint64_t invmod_u64(uint64_t a, uint64_t m);  // m need not be prime; a coprime to m
bool is_prime_u64(uint64_t n);                // deterministic Miller-Rabin
uint64_t next_prime_u64(uint64_t n);          // smallest prime > n

// ---- primality for BigInt ---------------------------------------------------

// Strong probable-prime test with the fixed bases 2..37 followed by a strong
// Lucas test (Selfridge parameters). Deterministic for a given input.
bool is_probable_prime(const BigInt& n);
BigInt next_probable_prime(const BigInt& n);  // smallest probable prime > n

// ---- square-part decomposition (n = sign * ell^a * M^2) ---------------------

struct SquarePartSplit {
    bool ok = false;
    int sign = 1;
    unsigned long ell_exp = 0;
    BigInt root;         // M, when ok
    BigInt obstruction;  // smallest found non-square obstruction, when !ok
};

// Decompose n as sign * ell^a * M^2, or report the obstruction found by
// bounded trial division (without claiming a full factorization of M).
SquarePartSplit square_part_split(const BigInt& n, unsigned long ell,
                                  unsigned long trial_bound = 100000);

// CRT on a pair of coprime moduli; result canonical mod m1*m2.
BigInt crt_pair(const BigInt& a1, const BigInt& m1, const BigInt& a2, const BigInt& m2);

// Primes just below 2^62 for multi-modular algorithms, generated on demand.
class WordPrimePool {
  public:
    uint64_t prime(size_t i);

  private:
    std::vector<uint64_t> primes_;
};

}  // namespace galrep

#endif
