#include "galrep/bigint.hpp"
#include "galrep/poly.hpp"
#include "galrep/resultant.hpp"

#include <doctest.h>

using namespace galrep;

namespace {

uint64_t rng_state = 0x5eed5eed5eedull;
long rnd(long lo, long hi) {
    rng_state = rng_state * 6364136223846793005ull + 1442695040888963407ull;
    return lo + static_cast<long>((rng_state >> 33) % static_cast<uint64_t>(hi - lo + 1));
}

Poly<ZRing> random_zpoly(int maxdeg, long maxcoef) {
    ZRing ZZ;
    Poly<ZRing> f;
    int d = static_cast<int>(rnd(0, maxdeg));
    for (int i = 0; i <= d; ++i) f.c.push_back(BigInt(rnd(-maxcoef, maxcoef)));
    poly_normalize(ZZ, f);
    return f;
}

}  // namespace

TEST_CASE("polynomial arithmetic over Z and Z/m") {
    ZRing ZZ;
    Poly<ZRing> a = poly_from_longs(ZZ, {1L, 1L});   // x + 1
    Poly<ZRing> b = poly_from_longs(ZZ, {-1L, 1L});  // x - 1
    Poly<ZRing> prod = poly_mul(ZZ, a, b);
    CHECK(poly_eq(ZZ, prod, poly_from_longs(ZZ, {-1L, 0L, 1L})));

    auto [q, r] = poly_divrem(ZZ, prod, b);
    CHECK(poly_eq(ZZ, q, a));
    CHECK(r.is_zero());

    ZModRing R5{BigInt(5)};
    Poly<ZModRing> f = poly_reduce(R5, poly_from_longs(ZZ, {1L, 0L, 1L}));
    Poly<ZModRing> sq = poly_mul(R5, f, f);
    // (x^2+1)^2 = x^4 + 2x^2 + 1 mod 5
    Poly<ZModRing> expect;
    for (long c : {1L, 0L, 2L, 0L, 1L}) expect.c.push_back(BigInt(c));
    poly_normalize(R5, expect);
    CHECK(poly_eq(R5, sq, expect));
}

TEST_CASE("ring axioms on random triples") {
    ZRing ZZ;
    for (int iter = 0; iter < 40; ++iter) {
        Poly<ZRing> a = random_zpoly(5, 20), b = random_zpoly(5, 20), c = random_zpoly(5, 20);
        CHECK(poly_eq(ZZ, poly_mul(ZZ, a, poly_mul(ZZ, b, c)), poly_mul(ZZ, poly_mul(ZZ, a, b), c)));
        CHECK(poly_eq(ZZ, poly_mul(ZZ, a, poly_add(ZZ, b, c)),
                      poly_add(ZZ, poly_mul(ZZ, a, b), poly_mul(ZZ, a, c))));
        if (!b.is_zero() && b.c.back().is_one()) {
            auto [q, r] = poly_divrem(ZZ, a, b);
            CHECK(poly_eq(ZZ, a, poly_add(ZZ, poly_mul(ZZ, q, b), r)));
            CHECK(r.deg() < b.deg());
        }
    }
}

TEST_CASE("powmod with double modulus") {
    ZRing ZZ;
    ZModRing R5{BigInt(5)};
    Poly<ZModRing> F = poly_reduce(R5, poly_from_longs(ZZ, {1L, 0L, 1L}));  // x^2+1
    Poly<ZModRing> x = poly_x(R5);
    // x^4 = 1 mod (x^2+1, 5)
    Poly<ZModRing> r = poly_powmod(R5, x, BigInt(4), F);
    CHECK(poly_eq(R5, r, poly_one(R5)));
    // g^0 = 1
    Poly<ZModRing> g = poly_reduce(R5, poly_from_longs(ZZ, {2L, 3L}));
    CHECK(poly_eq(R5, poly_powmod(R5, g, BigInt(0), F), poly_one(R5)));
    // x^3 = 2x mod (t^2+1, 3)
    ZModRing R3{BigInt(3)};
    Poly<ZModRing> F3 = poly_reduce(R3, poly_from_longs(ZZ, {1L, 0L, 1L}));
    Poly<ZModRing> x3 = poly_powmod(R3, poly_x(R3), BigInt(3), F3);
    Poly<ZModRing> expect;
    expect.c.push_back(BigInt(0));
    expect.c.push_back(BigInt(2));
    CHECK(poly_eq(R3, x3, expect));
}

TEST_CASE("resultants: fixed values and dual-route agreement") {
    ZRing ZZ;
    Poly<ZRing> f = poly_from_longs(ZZ, {-1L, 0L, 1L});  // x^2-1
    Poly<ZRing> g = poly_from_longs(ZZ, {-2L, 1L});      // x-2
    CHECK(resultant_z(f, g) == BigInt(3));
    CHECK(resultant_subres(f, g) == BigInt(3));

    // disc(x^2+1) = -4
    CHECK(discriminant_z(poly_from_longs(ZZ, {1L, 0L, 1L})) == BigInt(-4));
    // disc(x^2+bx+c) = b^2-4c on a few values
    for (long b = -3; b <= 3; ++b)
        for (long c = -3; c <= 3; ++c)
            CHECK(discriminant_z(poly_from_longs(ZZ, {c, b, 1L})) == BigInt(b * b - 4 * c));

    // swap sign law and agreement of the two independent routes
    for (int iter = 0; iter < 60; ++iter) {
        Poly<ZRing> a = random_zpoly(5, 8), b = random_zpoly(5, 8);
        if (a.is_zero() || b.is_zero()) continue;
        BigInt rab = resultant_subres(a, b);
        BigInt rba = resultant_subres(b, a);
        BigInt sign = ((a.deg() * b.deg()) % 2 == 0) ? BigInt(1) : BigInt(-1);
        CHECK(rab == sign * rba);
        CHECK(resultant_z(a, b) == rab);
    }
}

TEST_CASE("resultant multiplicativity") {
    for (int iter = 0; iter < 40; ++iter) {
        ZRing ZZ;
        Poly<ZRing> a = random_zpoly(4, 6), b = random_zpoly(4, 6), c = random_zpoly(4, 6);
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        Poly<ZRing> ab = poly_mul(ZZ, a, b);
        if (ab.is_zero()) continue;
        CHECK(resultant_z(ab, c) == resultant_z(a, c) * resultant_z(b, c));
    }
}

TEST_CASE("sturm real root counting") {
    ZRing ZZ;
    CHECK(sturm_count_z(poly_from_longs(ZZ, {-2L, 0L, 1L})) == 2);
    CHECK(sturm_count_z(poly_from_longs(ZZ, {1L, 0L, 1L})) == 0);
    // (x^2-2)(x^2+1)(x-3) has 3 real roots
    Poly<ZRing> f = poly_mul(ZZ, poly_mul(ZZ, poly_from_longs(ZZ, {-2L, 0L, 1L}),
                                          poly_from_longs(ZZ, {1L, 0L, 1L})),
                             poly_from_longs(ZZ, {-3L, 1L}));
    CHECK(sturm_count_z(f) == 3);

    // real count + 2*(complex pair count) = degree of the squarefree part,
    // on products of known distinct linear and irreducible quadratic factors
    for (int iter = 0; iter < 20; ++iter) {
        Poly<ZRing> g = poly_one(ZZ);
        int real = 0, cpx = 0;
        std::vector<long> used_roots, used_offs;
        for (int k = 0; k < 4; ++k) {
            if (rnd(0, 1) == 0) {
                long root = rnd(-6, 6);
                bool dup = false;
                for (long u : used_roots) dup |= (u == root);
                if (dup) continue;
                used_roots.push_back(root);
                g = poly_mul(ZZ, g, poly_from_longs(ZZ, {-root, 1L}));
                ++real;
            } else {
                long off = rnd(1, 5);
                bool dup = false;
                for (long u : used_offs) dup |= (u == off);
                if (dup) continue;
                used_offs.push_back(off);
                g = poly_mul(ZZ, g, poly_from_longs(ZZ, {off, 0L, 1L}));
                ++cpx;
            }
        }
        if (g.deg() < 1) continue;
        CHECK(sturm_count_z(g) == real);
        CHECK(real + 2 * cpx == g.deg());
    }
}

TEST_CASE("square part split") {
    // n = -11^3 * 49
    BigInt n = BigInt(-1) * pow(BigInt(11), 3) * BigInt(49);
    auto sp = square_part_split(n, 11);
    REQUIRE(sp.ok);
    CHECK(sp.sign == -1);
    CHECK(sp.ell_exp == 3);
    CHECK(sp.root == BigInt(7));
    // reassembly round-trip
    BigInt back = BigInt(sp.sign) * pow(BigInt(11), sp.ell_exp) * sp.root * sp.root;
    CHECK(back == n);

    auto bad = square_part_split(BigInt(12), 11);
    CHECK(!bad.ok);
    CHECK(bad.obstruction == BigInt(3));

    auto pure = square_part_split(pow(BigInt(13), 4), 13);
    REQUIRE(pure.ok);
    CHECK(pure.sign == 1);
    CHECK(pure.ell_exp == 4);
    CHECK(pure.root == BigInt(1));
}

TEST_CASE("algebra trace") {
    ZRing ZZ;
    ZModRing R5{BigInt(5), true};
    Poly<ZModRing> F = poly_reduce(R5, poly_from_longs(ZZ, {1L, 0L, 1L}));
    CHECK(algebra_trace(R5, poly_x(R5), F) == BigInt(0));
    CHECK(algebra_trace(R5, poly_one(R5), F) == BigInt(2));

    ZModRing R7{BigInt(7), true};
    Poly<ZModRing> G = poly_reduce(R7, poly_from_longs(ZZ, {2L, -3L, 1L}));  // roots 1, 2
    CHECK(algebra_trace(R7, poly_x(R7), G) == BigInt(3));
}

TEST_CASE("cauchy root bound") {
    ZRing ZZ;
    CHECK(cauchy_root_bound(poly_from_longs(ZZ, {-2L, 0L, 1L})) == BigRat(3L));
    CHECK(cauchy_root_bound(poly_from_longs(ZZ, {0L, 0L, 0L, 1L})) == BigRat(1L));
    CHECK(cauchy_root_bound(poly_from_longs(ZZ, {6L, -5L, 1L})) == BigRat(7L));
}

TEST_CASE("bigint primitives") {
    CHECK(symmetric_mod(BigInt(7), BigInt(11)) == BigInt(-4));
    CHECK(symmetric_mod(BigInt(3), BigInt(11)) == BigInt(3));
    CHECK(is_probable_prime(BigInt("1000000000000066600000000000001")));
    CHECK(!is_probable_prime(BigInt("1000000000000066600000000000003")));
    CHECK(next_prime_u64(100) == 101);
    // rationals stay in lowest terms with positive denominator
    BigRat q(BigInt(4), BigInt(-6));
    CHECK(q.num() == BigInt(-2));
    CHECK(q.den() == BigInt(3));
}
