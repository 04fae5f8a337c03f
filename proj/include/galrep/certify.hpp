#ifndef GALREP_CERTIFY_HPP
#define GALREP_CERTIFY_HPP

/* The certification checklist: discriminant and real-root sanity checks,
 * the assertion searches A1/A3, the A2 machinery (Q_i construction, kappa
 * subfield minimal polynomials via Gaussian periods, containment and
 * non-containment certificates), tower trace-down, and the twist
 * elimination against the q-expansion oracle. Every pass verdict carries a
 * witness that re-verifies without re-searching; exceeding a search cap is
 * never a silent pass. */

#include "galrep/bigint.hpp"
#include "galrep/gl2.hpp"
#include "galrep/modforms.hpp"
#include "galrep/padic.hpp"
#include "galrep/poly.hpp"
#include "galrep/resolvent.hpp"

#include <string>
#include <vector>

namespace galrep {

struct CheckResult {
    enum class Status { Pass, Fail, Skipped };
    std::string name;
    Status status = Status::Fail;
    std::string witness;

    bool passed() const { return status == Status::Pass; }
    std::string line() const;  // "CHECK <name> <pass|fail|skipped> <witnesses...>"
};

struct CertReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
    void add(CheckResult c) { checks.push_back(std::move(c)); }
};

// disc(F) = +- ell^a M^2, with the sign law checked when deg F = ell^2 - 1
CheckResult sanity_disc(const Poly<ZRing>& F, int ell);

// sturm_count(F_r) must equal the brute-forced fixed-point count of the
// complex-conjugation class on V_r
CheckResult sanity_real_roots(const Poly<ZRing>& Fr, int ell, int r);

// split primes v = 1 mod ell spanning (Z/2^{r+3}N)* (x) Z/2^{r+1}
CheckResult check_A1(const Poly<ZRing>& Fr, int ell, long N, int r, uint64_t cap = 1000000);

// a prime splitting F_i completely but not F_{i+1}
CheckResult check_A3(const Poly<ZRing>& Fi, const Poly<ZRing>& Fi1, uint64_t cap = 1000000);

// Q_i(x) = Res_y(Delta_i(y), Delta_i(x y)) / (x-1)^{deg Delta_i}
Poly<ZRing> build_Qi(const Poly<ZRing>& delta_i);

// minimal polynomial of the degree-2^j Gaussian period of Q(mu_ell)
Poly<ZRing> kappa_minpoly(int ell, int j);

CheckResult check_A2_noncontainment(const Poly<ZRing>& R, int ell, int j, uint64_t cap = 1000000);
CheckResult check_A2_containment(const Poly<ZRing>& R, int ell, int j);

// Trace the p-adic roots of F_{level} down the fibers of V_level -> V_{level-1};
// returns the integer polynomial below, or throws bound_exceeded for a pairing
// that does not respect the fiber structure.
Poly<ZRing> trace_down(const UnramExt& E, const GL2Quot& upper, const Indexation& idx);

// Core form: fibers given directly as lists of root indices.
Poly<ZRing> trace_down_pairs(const UnramExt& E, const std::vector<std::vector<int>>& index_fibers);

// twist elimination: nonzero-trace primes spanning (Z/N)* (x) Z/2^r whose
// pipeline trace matches the oracle
CheckResult certify_twist(const ResolventEngine& engine, const ResolventTable& table,
                          const ModformsOracle& oracle, long N, uint64_t cap = 1000);

// true iff F0 mod v factors into linear and quadratic pieces with at least one
// quadratic: the projective Frobenius has order exactly 2
bool projective_order2_test(const Poly<ZRing>& F0, uint64_t v);

// spanning test in (Z/M)* (x) Z/2^t for a factored modulus M; the group
// machinery behind A1 and the twist check, exposed for direct testing
bool tensor_group_spans(const std::vector<std::pair<long, int>>& modulus_factors, int t,
                        const std::vector<long>& witnesses);

}  // namespace galrep

#endif
