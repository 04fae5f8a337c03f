#ifndef GALREP_MODFORMS_HPP
#define GALREP_MODFORMS_HPP

/* Exact q-expansions of the level-one forms used as the independent oracle:
 * E4, E6, Delta (two constructions), the rational eigenforms f_k for
 * k in {12,16,18,20,22,26}, and the weight-24 eigenform over Z[alpha],
 * alpha^2 = alpha + 36042. Coefficients are exact integers; series products
 * go through Kronecker substitution so truncations around 10^5 stay cheap. */

#include "galrep/bigint.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace galrep {

// a + b*alpha with rational coordinates; alpha^2 = alpha + 36042
struct QuadElem {
    BigRat a, b;

    QuadElem() = default;
    QuadElem(BigRat x, BigRat y) : a(std::move(x)), b(std::move(y)) {}
    static QuadElem integer(long v) { return {BigRat(v), BigRat(0L)}; }

    QuadElem operator+(const QuadElem& o) const { return {a + o.a, b + o.b}; }
    QuadElem operator-(const QuadElem& o) const { return {a - o.a, b - o.b}; }
    QuadElem operator*(const QuadElem& o) const {
        // (a + b y)(c + d y) = ac + 36042 bd + (ad + bc + bd) y
        BigRat bd = b * o.b;
        return {a * o.a + BigRat(36042L) * bd, a * o.b + b * o.a + bd};
    }
    QuadElem conj() const { return {a + b, -b}; }  // alpha -> 1 - alpha
    bool operator==(const QuadElem& o) const { return a == o.a && b == o.b; }
    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    bool is_integral() const { return a.is_integer() && b.is_integer(); }
    QuadElem inverse() const;
};

// truncated q-series with exact integer coefficients, indices 0..T
struct QSeries {
    std::vector<BigInt> a;
    int truncation() const { return static_cast<int>(a.size()) - 1; }
    const BigInt& operator[](size_t n) const { return a[n]; }
};

// truncated q-series over Z[alpha]: coefficient n is x[n] + y[n]*alpha
struct QSeriesQuad {
    std::vector<BigInt> x, y;
    int truncation() const { return static_cast<int>(x.size()) - 1; }
};

// exact series product truncated at min(T_a, T_b)
QSeries mul_series(const QSeries& f, const QSeries& g);

QSeries eisenstein(int k, int T);            // k in {4, 6}
QSeries delta(int T);                        // (E4^3 - E6^2)/1728
QSeries delta_product_formula(int T);        // q prod (1-q^n)^24, via the pentagonal sieve
QSeries eigenform(int k, int T);             // k in {12,16,18,20,22,26}
QSeriesQuad s24_eigenform(int T);            // normalized, a_2 = 24(22+alpha)

// characteristic polynomial x^2 - tr x + ... of T_2 on S_24, for checking
std::pair<BigInt, BigInt> s24_t2_charpoly_coeffs();  // (trace, det)

// unique a + b*alpha mod 31 with a+5b = t5, a+27b = t27
std::pair<uint64_t, uint64_t> crt_combine(uint64_t t5, uint64_t t27);

// Lazy per-weight cache over a fixed truncation.
class ModformsOracle {
  public:
    explicit ModformsOracle(int T) : T_(T) {}

    int truncation() const { return T_; }
    const QSeries& form(int k) const;          // rational eigenforms
    const QSeriesQuad& form24() const;

    // a_n(f_k) mod ell; for k = 24, embedding is 5 or 27 (alpha specialized)
    uint64_t tau_mod(int k, long n, uint64_t ell, int embedding = 0) const;
    // exact coefficient (rational weights only)
    const BigInt& tau(int k, long n) const;

  private:
    int T_;
    mutable std::map<int, QSeries> forms_;
    mutable QSeriesQuad f24_;
};

}  // namespace galrep

#endif
