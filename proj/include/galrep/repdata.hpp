#ifndef GALREP_REPDATA_HPP
#define GALREP_REPDATA_HPP

/* GALREP-DATA input files: the precomputed defining polynomials F_r with
 * their (ell, weight, r, form label, optional embedding) metadata, and the
 * prime expressions like "10^1000+453" used by the table drivers. */

#include "galrep/bigint.hpp"
#include "galrep/poly.hpp"

#include <iosfwd>
#include <string>

namespace galrep {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RepDataFile {
    int ell = 0;
    int weight = 0;
    int r = 0;
    std::string form;
    int embedding = 0;  // 0 none; 5 or 27 for the weight-24 pair
    Poly<ZRing> F;

    void validate() const;  // degree 2^r(ell+1), monic, ell odd prime
    void save(std::ostream& os) const;
    static RepDataFile load(std::istream& is);
    static RepDataFile load_file(const std::string& path);
};

struct PrimeExpr {
    BigInt value;
    std::string display;  // as given: "10^1000+453" or plain decimal
};

// accepts "<dec>", "10^<e>", "10^<e>+<c>", "10^<e>-<c>"
PrimeExpr parse_prime_expr(const std::string& s);

}  // namespace galrep

#endif
