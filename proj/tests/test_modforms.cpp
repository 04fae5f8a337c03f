#include "galrep/modforms.hpp"

#include <doctest.h>

using namespace galrep;

TEST_CASE("eisenstein series") {
    QSeries e4 = eisenstein(4, 6);
    CHECK(e4.a[0] == BigInt(1));
    CHECK(e4.a[1] == BigInt(240));
    CHECK(e4.a[2] == BigInt(2160));  // 240 * sigma_3(2) = 240 * 9
    QSeries e6 = eisenstein(6, 6);
    CHECK(e6.a[0] == BigInt(1));
    CHECK(e6.a[1] == BigInt(-504));
    CHECK(e6.a[2] == BigInt(-16632));  // -504 * 33
    CHECK_THROWS(eisenstein(8, 4));
}

TEST_CASE("delta: two independent constructions agree") {
    QSeries d = delta(600);
    CHECK(d.a[0].is_zero());
    CHECK(d.a[1] == BigInt(1));
    CHECK(d.a[2] == BigInt(-24));
    CHECK(d.a[3] == BigInt(252));
    CHECK(d.a[4] == BigInt(-1472));
    CHECK(d.a[5] == BigInt(4830));
    QSeries dp = delta_product_formula(600);
    REQUIRE(dp.a.size() == d.a.size());
    for (size_t i = 0; i < d.a.size(); ++i) CHECK(d.a[i] == dp.a[i]);
}

TEST_CASE("eigenform q-expansion headers") {
    CHECK(eigenform(16, 3).a[2] == BigInt(216));
    CHECK(eigenform(16, 3).a[3] == BigInt(-3348));
    CHECK(eigenform(18, 3).a[2] == BigInt(-528));
    CHECK(eigenform(18, 3).a[3] == BigInt(-4284));
    CHECK(eigenform(20, 3).a[2] == BigInt(456));
    CHECK(eigenform(20, 3).a[3] == BigInt(50652));
    CHECK(eigenform(22, 3).a[2] == BigInt(-288));
    CHECK(eigenform(22, 3).a[3] == BigInt(-128844));
    CHECK(eigenform(26, 3).a[2] == BigInt(-48));
    CHECK(eigenform(26, 3).a[3] == BigInt(-195804));
    CHECK_THROWS(eigenform(14, 3));
}

TEST_CASE("hecke multiplicativity") {
    for (int k : {12, 16}) {
        QSeries f = eigenform(k, 2600);
        // a(mn) = a(m) a(n) for coprime m, n
        for (long m = 2; m <= 200; ++m)
            for (long n = m + 1; m * n <= 2600 && n <= 200; ++n) {
                BigInt g = gcd(BigInt(m), BigInt(n));
                if (!g.is_one()) continue;
                CHECK(f.a[static_cast<size_t>(m * n)] ==
                      f.a[static_cast<size_t>(m)] * f.a[static_cast<size_t>(n)]);
            }
        // a(p^2) = a(p)^2 - p^{k-1}
        for (long p = 2; p <= 50; p = static_cast<long>(next_prime_u64(static_cast<uint64_t>(p)))) {
            if (p * p > 2600) break;
            BigInt expect = f.a[static_cast<size_t>(p)] * f.a[static_cast<size_t>(p)] -
                            pow(BigInt(p), static_cast<unsigned long>(k - 1));
            CHECK(f.a[static_cast<size_t>(p * p)] == expect);
        }
    }
}

TEST_CASE("weight 24 eigenform over Z[alpha]") {
    auto [tr, det] = s24_t2_charpoly_coeffs();
    CHECK(tr == BigInt(1080));
    CHECK(det == BigInt(-20468736));  // char poly x^2 - 1080x - 20468736

    QSeriesQuad f = s24_eigenform(64);
    CHECK(f.x[1] == BigInt(1));
    CHECK(f.y[1].is_zero());
    CHECK(f.x[2] == BigInt(528));  // a_2 = 24(22 + alpha)
    CHECK(f.y[2] == BigInt(24));
    CHECK(f.x[3] == BigInt(170316));  // a_3 = 36(4731 - 32 alpha)
    CHECK(f.y[3] == BigInt(-1152));
}

TEST_CASE("tau reductions and CRT recombination") {
    ModformsOracle oracle(64);
    CHECK(oracle.tau_mod(12, 2, 11) == 9);   // -24 mod 11
    CHECK(oracle.tau_mod(12, 1, 7) == 1);
    CHECK(oracle.tau_mod(24, 2, 31, 5) == 28);   // 528 + 24*5 = 648 = 28 mod 31
    CHECK(oracle.tau_mod(24, 2, 31, 27) == (528 + 24 * 27) % 31);
    CHECK_THROWS(oracle.tau_mod(12, 100, 11));  // beyond truncation

    auto [a, b] = crt_combine(5, 4);
    CHECK(a == 1);
    CHECK(b == 7);
    auto [a2, b2] = crt_combine(17, 17);
    CHECK(a2 == 17);
    CHECK(b2 == 0);
    // round trip through both embeddings
    for (uint64_t t5 = 0; t5 < 31; t5 += 5)
        for (uint64_t t27 = 0; t27 < 31; t27 += 7) {
            auto [x, y] = crt_combine(t5, t27);
            CHECK((x + 5 * y) % 31 == t5);
            CHECK((x + 27 * y) % 31 == t27);
        }
}

TEST_CASE("quad element arithmetic") {
    QuadElem alpha{BigRat(0L), BigRat(1L)};
    QuadElem asq = alpha * alpha;
    CHECK(asq.a == BigRat(36042L));
    CHECK(asq.b == BigRat(1L));
    QuadElem n = alpha * alpha.conj();
    CHECK(n.a == BigRat(-36042L));
    CHECK(n.b.is_zero());
    QuadElem inv = alpha.inverse();
    QuadElem prod = inv * alpha;
    CHECK(prod.a == BigRat(1L));
    CHECK(prod.b.is_zero());
}
