#ifndef GALREP_RESULTANT_HPP
#define GALREP_RESULTANT_HPP

/* Exact resultants and discriminants over Z, Sturm real-root counting, and
 * the Cauchy root bound. The table polynomials have discriminants with
 * thousands of digits, so the default resultant route is multi-modular with
 * CRT against a Hadamard bound; the subresultant PRS is kept as an
 * independent exact route for cross-checking. */

#include "galrep/bigint.hpp"
#include "galrep/poly.hpp"

namespace galrep {

// Resultant over a word prime field via the Euclidean remainder sequence.
uint64_t resultant_mod(const WordRing& F, Poly<WordRing> a, Poly<WordRing> b);

// Exact resultant of nonzero integer polynomials: modular + CRT.
BigInt resultant_z(const Poly<ZRing>& a, const Poly<ZRing>& b);

// Exact resultant via the subresultant PRS (Cohen, Alg. 3.3.7).
BigInt resultant_subres(const Poly<ZRing>& a, const Poly<ZRing>& b);

// disc(F) = (-1)^{n(n-1)/2} Res(F, F') / lc(F)
BigInt discriminant_z(const Poly<ZRing>& f);

// gcd over Z via the primitive remainder sequence (primitive output, lc > 0)
Poly<ZRing> poly_gcd_z(Poly<ZRing> a, Poly<ZRing> b);

// Number of distinct real roots, exact. The squarefree part is taken
// internally, so repeated roots are counted once.
int sturm_count(const Poly<QRing>& f);
int sturm_count_z(const Poly<ZRing>& f);

// B = 1 + max_i |a_i / a_n| >= modulus of every complex root
BigRat cauchy_root_bound(const Poly<ZRing>& f);

}  // namespace galrep

#endif
