#include "galrep/padic.hpp"
#include "galrep/poly.hpp"

#include <doctest.h>

using namespace galrep;

namespace {

Poly<ZRing> zpoly(std::initializer_list<long> cs) {
    ZRing ZZ;
    return poly_from_longs(ZZ, cs);
}

}  // namespace

TEST_CASE("frobenius of t^2+1 at p=3 is -t") {
    for (int K : {1, 4, 9}) {
        UnramExt E(3, K, zpoly({1L, 0L, 1L}));
        const auto& s = E.frobenius();
        CHECK(s[0].is_zero());
        CHECK(s[1] == E.pK() - BigInt(1));  // -t
    }
}

TEST_CASE("reducible modulus is rejected") {
    // 3^2 = 2 mod 7, so t^2-2 is split mod 7
    CHECK_THROWS(UnramExt(7, 2, zpoly({-2L, 0L, 1L})));
}

TEST_CASE("frobenius of t^2+1 at p=7, K=2") {
    UnramExt E(7, 2, zpoly({1L, 0L, 1L}));
    const auto& s = E.frobenius();
    CHECK(s[0].is_zero());
    CHECK(s[1] == BigInt(48));  // -t mod 49
}

TEST_CASE("precision doubling consistency") {
    Poly<ZRing> F = zpoly({-1L, -1L, 0L, 1L});  // t^3 - t - 1, irreducible mod 3
    UnramExt lo(3, 4, F);
    UnramExt hi(3, 11, F);
    const auto& slo = lo.frobenius();
    const auto& shi = hi.frobenius();
    for (size_t i = 0; i < slo.size(); ++i) CHECK(shi[i].mod(lo.pK()) == slo[i]);
}

TEST_CASE("roots cycle: closure, distinctness, symmetric functions") {
    Poly<ZRing> F = zpoly({-1L, -1L, 0L, 1L});
    UnramExt E(3, 6, F);
    const auto& roots = E.roots_cycle();
    REQUIRE(roots.size() == 3);
    // every r_j is a root
    for (const auto& r : roots) CHECK(E.ctx().is_zero(E.ctx().eval_zpoly(F, r)));
    // sigma^3 = id: t^{3^3} = t mod (F, 3)
    ZModRing R3{BigInt(3)};
    ZRing ZZ;
    Poly<ZModRing> Fm = poly_reduce(R3, F);
    Poly<ZModRing> t27 = poly_powmod(R3, poly_x(R3), BigInt(27), Fm);
    CHECK(poly_eq(R3, t27, poly_x(R3)));
    // elementary symmetric functions reproduce F's coefficients mod p^K:
    // prod (x - r_j) = F
    const PolyQuotCtx& ctx = E.ctx();
    std::vector<PolyQuotCtx::Elem> pc{ctx.one()};
    for (const auto& r : roots) {
        std::vector<PolyQuotCtx::Elem> next(pc.size() + 1, ctx.zero());
        for (size_t i = 0; i < pc.size(); ++i) {
            next[i + 1] = ctx.add(next[i + 1], pc[i]);
            next[i] = ctx.sub(next[i], ctx.mul(pc[i], r));
        }
        pc = std::move(next);
    }
    for (int i = 0; i <= 3; ++i) {
        CHECK(ctx.elem_deg(pc[static_cast<size_t>(i)]) <= 0);
        BigInt expect = F.c[static_cast<size_t>(i)].mod(E.pK());
        CHECK(pc[static_cast<size_t>(i)][0] == expect);
    }
}

TEST_CASE("roots of t^2+1 at p=3 are t and -t") {
    UnramExt E(3, 5, zpoly({1L, 0L, 1L}));
    const auto& roots = E.roots_cycle();
    REQUIRE(roots.size() == 2);
    CHECK(roots[0][1].is_one());
    CHECK(roots[0][0].is_zero());
    CHECK(roots[1][1] == E.pK() - BigInt(1));
}

TEST_CASE("integer reconstruction") {
    CHECK(reconstruct_integer(BigInt(7), BigInt(5), BigInt(11)) == BigInt(-4));
    CHECK(reconstruct_integer(BigInt(3), BigInt(5), BigInt(11)) == BigInt(3));
    CHECK_THROWS_AS(reconstruct_integer(BigInt(5), BigInt(4), BigInt(11)), bound_exceeded);
    // 2B < modulus precondition
    CHECK_THROWS(reconstruct_integer(BigInt(5), BigInt(6), BigInt(11)));
}

TEST_CASE("quotient context arithmetic against the generic path") {
    // cross-check PolyQuotCtx multiplication against schoolbook mod-m polys
    Poly<ZRing> F = zpoly({4L, -3L, 0L, 0L, 1L});  // monic quartic
    BigInt m = pow(BigInt(7), 13);
    PolyQuotCtx ctx(m, F);
    ZModRing Rm(m);
    Poly<ZModRing> Fm = poly_reduce(Rm, F);
    uint64_t st = 99;
    auto rnd_elem = [&]() {
        PolyQuotCtx::Elem e(4);
        for (auto& c : e) {
            st = st * 6364136223846793005ull + 1;
            e[0] = e[0];  // keep clang-tidy quiet about unused warnings
            c = BigInt(static_cast<long>(st >> 8)).mod(m);
        }
        return e;
    };
    for (int iter = 0; iter < 10; ++iter) {
        auto a = rnd_elem(), b = rnd_elem();
        auto prod = ctx.mul(a, b);
        Poly<ZModRing> pa, pb;
        pa.c = a;
        pb.c = b;
        poly_normalize(Rm, pa);
        poly_normalize(Rm, pb);
        Poly<ZModRing> want = poly_rem(Rm, poly_mul(Rm, pa, pb), Fm);
        Poly<ZModRing> got;
        got.c = prod;
        poly_normalize(Rm, got);
        CHECK(poly_eq(Rm, got, want));
    }
    // trace of the generator: -F[3] = 0 here; trace of 1 = 4
    CHECK(ctx.trace(ctx.one()) == BigInt(4));
    CHECK(ctx.trace(ctx.gen()) == BigInt(0));
    // pow_gen consistency with pow
    auto g = ctx.gen();
    CHECK(ctx.eq(ctx.pow_gen(BigInt(23)), ctx.pow(g, BigInt(23))));
    // inverse
    auto inv = ctx.invert(g);
    CHECK(ctx.eq(ctx.mul(inv, g), ctx.one()));
}
