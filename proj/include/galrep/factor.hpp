#ifndef GALREP_FACTOR_HPP
#define GALREP_FACTOR_HPP

/* Univariate factorization over word prime fields (squarefree decomposition,
 * distinct-degree splitting, randomized equal-degree splitting with
 * deterministic retry seeds) and over Z (Zassenhaus: good prime, quadratic
 * Hensel lifting past the Landau-Mignotte bound, subset recombination with
 * degree-set pruning across auxiliary primes). */

#include "galrep/bigint.hpp"
#include "galrep/poly.hpp"

#include <map>
#include <vector>

namespace galrep {

struct FactorizationFp {
    uint64_t p = 0;
    uint64_t unit = 1;                                   // leading unit of the input mod p
    std::vector<std::pair<Poly<WordRing>, int>> factors;  // monic irreducible, multiplicity
};

struct FactorizationZ {
    BigInt content;  // signed content; product of factors is primitive with lc > 0
    std::vector<std::pair<Poly<ZRing>, int>> factors;
};

// Complete factorization of F mod p. Requires p prime not dividing lc(F).
FactorizationFp factor_mod_p(const Poly<ZRing>& F, uint64_t p, uint64_t seed = 1);
FactorizationFp factor_mod_p(const Poly<WordRing>& F, const WordRing& ring, uint64_t seed = 1);

// Multiset of irreducible factor degrees of F mod v (with multiplicity).
std::vector<int> degree_pattern(const Poly<ZRing>& F, uint64_t v, uint64_t seed = 1);

bool is_squarefree_mod(const Poly<ZRing>& F, uint64_t v);
bool totally_split(const Poly<ZRing>& F, uint64_t v);

// F irreducible mod p, checked without producing the factorization.
bool is_irreducible_mod(const Poly<ZRing>& F, uint64_t p);
bool is_irreducible_mod(const Poly<WordRing>& F, const WordRing& ring);

// Lift a pairwise-coprime factorization of F mod p to one mod p^K
// (quadratic Hensel; F need not be monic but lc(F) must be a unit mod p).
// Input and output factors are monic; the residual leading unit is implied.
std::vector<Poly<ZModRing>> hensel_lift_factors(const Poly<ZRing>& F,
                                                const std::vector<Poly<WordRing>>& factors,
                                                uint64_t p, int target_K);

// Factorization over Z into content and irreducible primitive factors.
FactorizationZ factor_over_Z(const Poly<ZRing>& F, uint64_t seed = 1);

}  // namespace galrep

#endif
