#ifndef GALREP_PADIC_HPP
#define GALREP_PADIC_HPP

/* The truncated unramified extension (Z/p^K)[t]/F(t) for F irreducible mod p:
 * Frobenius automorphism by Newton iteration with precision doubling, the
 * cycle of roots t, sigma(t), sigma^2(t), ..., and symmetric-residue integer
 * reconstruction against an archimedean bound. */

#include "galrep/bigint.hpp"
#include "galrep/poly.hpp"
#include "galrep/quotient.hpp"

#include <memory>
#include <stdexcept>
#include <vector>

namespace galrep {

struct bound_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class UnramExt {
  public:
    using Elem = PolyQuotCtx::Elem;

    // F monic over Z, irreducible mod p (checked); p odd; K >= 1.
    UnramExt(uint64_t p, int K, const Poly<ZRing>& F);

    uint64_t p() const { return p_; }
    int precision() const { return K_; }
    int degree() const { return n_; }
    const BigInt& pK() const { return pK_; }
    const Poly<ZRing>& poly() const { return F_; }
    const PolyQuotCtx& ctx() const { return ctx_; }

    // sigma(t): the unique root of F congruent to t^p mod p
    const Elem& frobenius() const;

    // r_j = sigma^j(t), j = 0..n-1; F(r_j) = 0 mod p^K, pairwise distinct mod p
    const std::vector<Elem>& roots_cycle() const;

    // apply sigma to an arbitrary element (composition with sigma(t))
    Elem frobenius_of(const Elem& a) const;

  private:
    uint64_t p_;
    int K_;
    int n_;
    BigInt pK_;
    Poly<ZRing> F_;
    PolyQuotCtx ctx_;
    mutable std::unique_ptr<Elem> frob_;
    mutable std::vector<Elem> roots_;
};

// The unique integer c = x mod m with |c| <= B; requires 2B < m.
BigInt reconstruct_integer(const BigInt& x, const BigInt& bound, const BigInt& modulus);

}  // namespace galrep

#endif
