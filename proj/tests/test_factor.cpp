#include "galrep/factor.hpp"
#include "galrep/poly.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace galrep;

namespace {

uint64_t rng_state = 0xfac70f5eedull;
long rnd(long lo, long hi) {
    rng_state = rng_state * 6364136223846793005ull + 1442695040888963407ull;
    return lo + static_cast<long>((rng_state >> 33) % static_cast<uint64_t>(hi - lo + 1));
}

Poly<ZRing> zpoly(std::initializer_list<long> cs) {
    ZRing ZZ;
    return poly_from_longs(ZZ, cs);
}

// multiply out a factorization over Z and compare with the input
void check_reconstructs(const Poly<ZRing>& F, const FactorizationZ& fz) {
    ZRing ZZ;
    Poly<ZRing> prod = poly_one(ZZ);
    for (const auto& [f, m] : fz.factors)
        for (int i = 0; i < m; ++i) prod = poly_mul(ZZ, prod, f);
    prod = poly_scale(ZZ, prod, fz.content);
    CHECK(poly_eq(ZZ, prod, F));
}

// all monic divisors of degree 1..3 with coefficient height <= bound
std::vector<Poly<ZRing>> brute_force_divisors(const Poly<ZRing>& F, long bound) {
    ZRing ZZ;
    QRing QQ;
    std::vector<Poly<ZRing>> out;
    auto divides = [&](const Poly<ZRing>& g) {
        auto qr = poly_divrem(QQ, poly_to_q(F), poly_to_q(g));
        if (!qr.second.is_zero()) return false;
        for (const auto& c : qr.first.c)
            if (!c.is_integer()) return false;
        return true;
    };
    for (long a = -bound; a <= bound; ++a) {
        Poly<ZRing> g = zpoly({a, 1L});
        if (divides(g)) out.push_back(g);
    }
    if (F.deg() >= 2)
        for (long a = -bound; a <= bound; ++a)
            for (long b = -bound; b <= bound; ++b) {
                Poly<ZRing> g = zpoly({a, b, 1L});
                if (divides(g)) out.push_back(g);
            }
    if (F.deg() >= 3)
        for (long a = -bound; a <= bound; ++a)
            for (long b = -bound; b <= bound; ++b)
                for (long c = -bound; c <= bound; ++c) {
                    Poly<ZRing> g = zpoly({a, b, c, 1L});
                    if (divides(g)) out.push_back(g);
                }
    return out;
}

}  // namespace

TEST_CASE("factor_mod_p fixed examples") {
    // x^2+1 mod 5 = (x-2)(x-3) = (x+2)(x+3)
    auto f1 = factor_mod_p(zpoly({1L, 0L, 1L}), 5);
    REQUIRE(f1.factors.size() == 2);
    CHECK(f1.factors[0].first.deg() == 1);
    CHECK(f1.factors[1].first.deg() == 1);
    std::set<uint64_t> consts{f1.factors[0].first.c[0], f1.factors[1].first.c[0]};
    CHECK(consts == std::set<uint64_t>{2, 3});  // x+2 and x+3

    auto f2 = factor_mod_p(zpoly({1L, 0L, 1L}), 7);
    REQUIRE(f2.factors.size() == 1);
    CHECK(f2.factors[0].first.deg() == 2);
    CHECK(f2.factors[0].second == 1);

    auto f3 = factor_mod_p(zpoly({1L, 0L, 0L, 0L, 1L}), 2);
    REQUIRE(f3.factors.size() == 1);
    CHECK(f3.factors[0].first.deg() == 1);
    CHECK(f3.factors[0].second == 4);  // (x+1)^4 mod 2
}

TEST_CASE("factor_mod_p recovers random constructed products") {
    for (uint64_t p : {5ull, 13ull, 101ull}) {
        WordRing R(p);
        for (int iter = 0; iter < 10; ++iter) {
            // product of distinct small irreducibles
            std::vector<Poly<WordRing>> irr;
            auto add_if_new = [&](Poly<WordRing> g) {
                if (is_irreducible_mod(g, R)) {
                    for (const auto& h : irr)
                        if (poly_eq(R, h, g)) return;
                    irr.push_back(std::move(g));
                }
            };
            while (irr.size() < 3) {
                Poly<WordRing> g;
                int d = static_cast<int>(rnd(1, 3));
                for (int i = 0; i < d; ++i)
                    g.c.push_back(static_cast<uint64_t>(rnd(0, static_cast<long>(p) - 1)));
                g.c.push_back(1);
                add_if_new(std::move(g));
            }
            Poly<WordRing> prod = poly_one(R);
            for (const auto& g : irr) prod = poly_mul(R, prod, g);
            auto fac = factor_mod_p(prod, R, 1 + static_cast<uint64_t>(iter));
            REQUIRE(fac.factors.size() == irr.size());
            for (const auto& [g, m] : fac.factors) {
                CHECK(m == 1);
                bool known = false;
                for (const auto& h : irr) known |= poly_eq(R, h, g);
                CHECK(known);
            }
        }
    }
}

TEST_CASE("degree pattern predicates") {
    auto pat = degree_pattern(zpoly({1L, 0L, 1L}), 13);
    CHECK(pat == std::vector<int>{1, 1});
    CHECK(is_squarefree_mod(zpoly({1L, 0L, 1L}), 13));
    CHECK(totally_split(zpoly({1L, 0L, 1L}), 13));

    auto pat8 = degree_pattern(zpoly({1L, 0L, 0L, 0L, 1L}), 13);
    CHECK(!totally_split(zpoly({1L, 0L, 0L, 0L, 1L}), 13));
    for (int d : pat8) CHECK(d > 1);  // no linear factor: no order-8 element mod 13

    CHECK(!is_squarefree_mod(zpoly({0L, 0L, 1L}), 5));

    // pattern degrees sum to deg F for squarefree reductions
    for (int iter = 0; iter < 10; ++iter) {
        Poly<ZRing> f;
        ZRing ZZ;
        for (int i = 0; i < 6; ++i) f.c.push_back(BigInt(rnd(-9, 9)));
        f.c.push_back(BigInt(1));
        poly_normalize(ZZ, f);
        if (!is_squarefree_mod(f, 101)) continue;
        auto degs = degree_pattern(f, 101);
        int sum = 0;
        for (int d : degs) sum += d;
        CHECK(sum == f.deg());
    }
}

TEST_CASE("hensel lifting") {
    ZRing ZZ;
    // x^2-1 = (x-1)(x+1) mod 3, unchanged mod 9
    {
        WordRing R3(3);
        std::vector<Poly<WordRing>> seeds;
        seeds.push_back(poly_reduce(R3, zpoly({-1L, 1L})));
        seeds.push_back(poly_reduce(R3, zpoly({1L, 1L})));
        auto lifted = hensel_lift_factors(zpoly({-1L, 0L, 1L}), seeds, 3, 2);
        REQUIRE(lifted.size() == 2);
        CHECK(symmetric_mod(lifted[0].c[0], BigInt(9)) == BigInt(-1));
        CHECK(symmetric_mod(lifted[1].c[0], BigInt(9)) == BigInt(1));
    }
    // x^2+1 = (x-2)(x+2) mod 5 lifts to (x-7)(x+7) mod 25
    {
        WordRing R5(5);
        std::vector<Poly<WordRing>> seeds;
        seeds.push_back(poly_reduce(R5, zpoly({-2L, 1L})));
        seeds.push_back(poly_reduce(R5, zpoly({2L, 1L})));
        auto lifted = hensel_lift_factors(zpoly({1L, 0L, 1L}), seeds, 5, 2);
        REQUIRE(lifted.size() == 2);
        CHECK(symmetric_mod(lifted[0].c[0], BigInt(25)) == BigInt(-7));
        CHECK(symmetric_mod(lifted[1].c[0], BigInt(25)) == BigInt(7));
        // idempotence: lifting again to the same precision changes nothing
        auto again = hensel_lift_factors(zpoly({1L, 0L, 1L}), seeds, 5, 2);
        for (size_t i = 0; i < lifted.size(); ++i) {
            REQUIRE(again[i].c.size() == lifted[i].c.size());
            for (size_t j = 0; j < lifted[i].c.size(); ++j) CHECK(again[i].c[j] == lifted[i].c[j]);
        }
    }
    // non-coprime seeds rejected
    {
        WordRing R5(5);
        std::vector<Poly<WordRing>> seeds;
        seeds.push_back(poly_reduce(R5, zpoly({-2L, 1L})));
        seeds.push_back(poly_reduce(R5, zpoly({-2L, 1L})));
        CHECK_THROWS(hensel_lift_factors(zpoly({4L, -4L, 1L}), seeds, 5, 2));
    }
}

TEST_CASE("factor_over_Z fixed examples") {
    ZRing ZZ;
    // x^4 - 1 = (x-1)(x+1)(x^2+1)
    auto fz = factor_over_Z(zpoly({-1L, 0L, 0L, 0L, 1L}));
    CHECK(fz.content == BigInt(1));
    REQUIRE(fz.factors.size() == 3);
    check_reconstructs(zpoly({-1L, 0L, 0L, 0L, 1L}), fz);
    CHECK(fz.factors[0].first.deg() == 1);
    CHECK(fz.factors[1].first.deg() == 1);
    CHECK(fz.factors[2].first.deg() == 2);

    // 4(x+1)^2: content 4, factor (x+1) with multiplicity 2
    auto f2 = factor_over_Z(zpoly({4L, 8L, 4L}));
    CHECK(f2.content == BigInt(4));
    REQUIRE(f2.factors.size() == 1);
    CHECK(f2.factors[0].second == 2);
    CHECK(poly_eq(ZZ, f2.factors[0].first, zpoly({1L, 1L})));

    // x^2 - x - 1 irreducible
    auto f3 = factor_over_Z(zpoly({-1L, -1L, 1L}));
    REQUIRE(f3.factors.size() == 1);
    CHECK(f3.factors[0].first.deg() == 2);
}

TEST_CASE("factor_over_Z vs bounded brute force") {
    ZRing ZZ;
    for (int iter = 0; iter < 30; ++iter) {
        // random monic product of one to three small monic factors
        Poly<ZRing> F = poly_one(ZZ);
        int nf = static_cast<int>(rnd(1, 3));
        for (int k = 0; k < nf && F.deg() < 5; ++k) {
            int d = static_cast<int>(rnd(1, 3));
            Poly<ZRing> g;
            for (int i = 0; i < d; ++i) g.c.push_back(BigInt(rnd(-3, 3)));
            g.c.push_back(BigInt(1));
            F = poly_mul(ZZ, F, g);
        }
        if (F.deg() < 1) continue;
        auto fz = factor_over_Z(F, 17);
        check_reconstructs(F, fz);
        // every enumerated small monic divisor must be a product of claimed factors
        auto divs = brute_force_divisors(F, 12);
        for (const auto& dpoly : divs) {
            auto dz = factor_over_Z(dpoly, 29);
            for (const auto& [g, m] : dz.factors) {
                bool found = false;
                for (const auto& [h, hm] : fz.factors) found |= poly_eq(ZZ, g, h);
                CHECK(found);
            }
        }
        // and each claimed factor of degree <= 3 with small height must be rediscovered
        for (const auto& [g, m] : fz.factors) {
            if (g.deg() > 3 || !g.c.back().is_one()) continue;
            bool small = true;
            for (const auto& c : g.c) small &= (c.abs() <= BigInt(12));
            if (!small) continue;
            bool found = false;
            for (const auto& dpoly : divs) found |= poly_eq(ZZ, g, dpoly);
            CHECK(found);
        }
    }
}
