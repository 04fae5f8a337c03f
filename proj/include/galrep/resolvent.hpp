#ifndef GALREP_RESOLVENT_HPP
#define GALREP_RESOLVENT_HPP

/* The Frobenius engine. Roots of F_r in the truncated unramified extension
 * are indexed by V_r = (F_ell^2 - 0)/S_r through a candidate n-cycle Phi;
 * wrong candidates are eliminated by the mod-p integrality of a resolvent
 * x^1-coefficient; the surviving indexation yields one integer resolvent
 * Gamma_C per conjugacy class of GL2(F_ell)/S_r, built from the exact root
 * cycle at a p-adic precision derived from archimedean bounds. A Frobenius
 * class at an arbitrary good prime v is then read off from which Gamma_C
 * vanishes at the trace quantity mod v. */

#include "galrep/bigint.hpp"
#include "galrep/gl2.hpp"
#include "galrep/modforms.hpp"
#include "galrep/padic.hpp"
#include "galrep/poly.hpp"
#include "galrep/quotient.hpp"

#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace galrep {

struct ambiguous_indexation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ambiguous_class : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct no_class : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct bad_prime : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Smallest prime p >= floor with F irreducible mod p. deg F >= 2 required.
uint64_t select_inert_prime(const Poly<ZRing>& F, uint64_t floor_val, uint64_t max_tries = 1000000);

struct Indexation {
    int phi = -1;                 // element id of Phi in GL2Quot at level r
    std::vector<int> orbit_at;    // root index j -> V_r point id, orbit_at[0] = base
    std::vector<int> index_of;    // V_r point id -> root index j
};

struct ResolventClassEntry {
    uint16_t trace_cls = 0;
    uint16_t det_cls = 0;
    int size = 0;
    Mat2 rep;
    std::vector<BigInt> gamma;  // monic, ascending, deg = size
};

struct ResolventTable {
    int ell = 0, weight = 0, r = 0;
    std::string form;
    uint64_t p = 0;
    int K = 0;
    Poly<ZRing> h;
    Poly<ZRing> F;  // the defining polynomial, part of the provenance
    Mat2 phi;
    BigInt bound;  // B_Gamma: |coefficients| <= bound, 2*bound < p^K
    std::vector<ResolventClassEntry> classes;

    void save(std::ostream& os) const;
    static ResolventTable load(std::istream& is);
};

struct FrobeniusResult {
    int class_index = 0;   // into table.classes
    GL2Class lifted;       // full GL2 class with det = v^{k-1}
    uint16_t trace = 0;    // a_v mod ell
    std::string minpoly;   // factored form, table format
};

class ResolventEngine {
  public:
    // F_r from certified input data; weight k used for determinant lifting.
    ResolventEngine(int ell, int weight, int r, std::string form, Poly<ZRing> F);

    const GL2Quot& group() const { return *G_; }
    const Poly<ZRing>& F() const { return F_; }

    uint64_t choose_prime(uint64_t floor_val = (1ull << 60)) const;

    // all n-cycle candidates, deduplicated by their class pattern data
    std::vector<Indexation> candidate_indexations(uint64_t p) const;

    // cheap first screen: the fiber-sum polynomial (the trace-down image)
    // must reconstruct to bounded integers at low p-adic precision
    std::vector<Indexation> filter_fiber_sums(const std::vector<Indexation>& cands,
                                              uint64_t p) const;

    // the x^1-coefficient of one resolvent Gamma_C, expanded mod x^2, must
    // reconstruct to an integer within its archimedean bound
    std::vector<Indexation> integrality_filter(const std::vector<Indexation>& cands, uint64_t p,
                                               const Poly<ZRing>& h) const;

    // full-precision construction for one surviving indexation
    ResolventTable build_resolvents(const Indexation& idx, uint64_t p, const Poly<ZRing>& h,
                                    int threads = 1, int precision_slack = 0) const;

    // end-to-end: prime, candidates, filters, probe-prime consistency
    ResolventTable build(const Poly<ZRing>& h, int threads = 1, int precision_slack = 0,
                         uint64_t prime_floor = (1ull << 60)) const;

    // query path
    uint16_t frobenius_class(const ResolventTable& table, const BigInt& v) const;  // class index
    FrobeniusResult a_p(const ResolventTable& table, const BigInt& v) const;

  private:
    int ell_, weight_, r_;
    std::string form_;
    Poly<ZRing> F_;
    std::unique_ptr<GL2Quot> G_;
    int n_;

    std::vector<std::vector<uint64_t>> roots_mod_p(uint64_t p) const;
    Indexation make_indexation(int phi) const;
};

}  // namespace galrep

#endif
