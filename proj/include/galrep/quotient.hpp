#ifndef GALREP_QUOTIENT_HPP
#define GALREP_QUOTIENT_HPP

/* Arithmetic in (Z/m)[t]/F(t) for a monic F over Z whose coefficients are
 * small compared to m. This is the inner loop of both the resolvent
 * construction (m = p^K) and the Frobenius queries at 1000-digit primes
 * (m = v), so multiplication packs coefficients into a single integer and
 * lets GMP's large multiplication do the work (Kronecker substitution);
 * reduction by F exploits the small coefficients of the table polynomials.
 */

#include "galrep/bigint.hpp"
#include "galrep/poly.hpp"

#include <vector>

namespace galrep {

class PolyQuotCtx {
  public:
    using Elem = std::vector<BigInt>;  // exactly n coefficients, canonical mod m

    PolyQuotCtx(BigInt modulus, const Poly<ZRing>& F);

    int degree() const { return n_; }
    const BigInt& modulus() const { return m_; }
    const Poly<ZRing>& poly() const { return F_; }

    Elem zero() const { return Elem(static_cast<size_t>(n_)); }
    Elem one() const;
    Elem gen() const;  // the class of t
    Elem from_poly(const Poly<ZRing>& g) const;      // reduces mod (F, m)
    Poly<ZRing> to_poly(const Elem& a) const;        // canonical coefficients

    bool is_zero(const Elem& a) const;
    bool eq(const Elem& a, const Elem& b) const;
    // degree in t of the canonical representative (-1 for zero); degree 0
    // means the element lies in the prime ring Z/m
    int elem_deg(const Elem& a) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem mul_scalar(const Elem& a, const BigInt& s) const;
    void add_assign(Elem& a, const Elem& b) const;
    // a += s * b, coefficients kept reduced
    void addmul_scalar(Elem& a, const Elem& b, const BigInt& s) const;

    // evaluate an integer polynomial at a (Horner)
    Elem eval_zpoly(const Poly<ZRing>& g, const Elem& a) const;

    // a^e by square-and-multiply
    Elem pow(const Elem& a, const BigInt& e) const;
    // t^e, multiplications by t done as shifts
    Elem pow_gen(const BigInt& e) const;

    // trace of multiplication-by-a on the quotient algebra
    BigInt trace(const Elem& a) const;

    // inverse via extended euclid over Z/m; throws if not invertible
    Elem invert(const Elem& a) const;

  private:
    void reduce_in_place(std::vector<BigInt>& c) const;  // degree reduction by F
    Elem mul_schoolbook(const Elem& a, const Elem& b) const;

    BigInt m_;
    Poly<ZRing> F_;               // original monic modulus polynomial
    std::vector<BigInt> Fred_;    // F's lower coefficients reduced mod m
    int n_ = 0;
    size_t slot_limbs_ = 0;       // Kronecker slot width (multiple of one limb)
    bool use_kronecker_ = false;
    mutable std::vector<BigInt> powsums_;  // cached power sums for trace
};

}  // namespace galrep

#endif
