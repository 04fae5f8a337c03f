#include "galrep/repdata.hpp"

#include <doctest.h>

#include <sstream>

using namespace galrep;

TEST_CASE("rep data round trip") {
    std::string text =
        "GALREP-DATA v1\n"
        "ell 11\n"
        "weight 12\n"
        "r 1\n"
        "form Delta\n"
        "poly\n";
    // a monic degree-24 polynomial
    for (int i = 0; i < 24; ++i) text += "1 ";
    text += "1\nend\n";
    std::istringstream in(text);
    RepDataFile d = RepDataFile::load(in);
    CHECK(d.ell == 11);
    CHECK(d.weight == 12);
    CHECK(d.F.deg() == 24);
    std::ostringstream out;
    d.save(out);
    std::istringstream in2(out.str());
    RepDataFile d2 = RepDataFile::load(in2);
    CHECK(d2.ell == d.ell);
    CHECK(poly_eq(ZRing{}, d2.F, d.F));
    std::ostringstream out2;
    d2.save(out2);
    CHECK(out.str() == out2.str());
}

TEST_CASE("rep data rejects malformed input") {
    {
        std::istringstream in("");
        CHECK_THROWS_AS(RepDataFile::load(in), parse_error);
    }
    {
        std::istringstream in("GALREP-DATA v1\nell 11\nweight 12\nr 1\nform X\npoly\n1 1\nend\n");
        CHECK_THROWS_AS(RepDataFile::load(in), parse_error);  // degree mismatch
    }
    {
        std::istringstream in("GALREP-DATA v1\nell 12\nweight 12\nr 1\nform X\npoly\n1\nend\n");
        CHECK_THROWS_AS(RepDataFile::load(in), parse_error);  // ell not prime
    }
    {
        std::istringstream in("GALREP-DATA v1\nell 11\nweight 12\nr 1\nbogus 3\npoly\n1\nend\n");
        CHECK_THROWS_AS(RepDataFile::load(in), parse_error);  // unknown field
    }
}

TEST_CASE("comments and whitespace are tolerated") {
    std::string text =
        "GALREP-DATA v1  # header\n"
        "ell 11\n# a comment line\nweight 12\nr 0\nform Delta\npoly\n";
    for (int i = 0; i < 12; ++i) text += "2\n";
    text += "1\nend\n";
    std::istringstream in(text);
    RepDataFile d = RepDataFile::load(in);
    CHECK(d.F.deg() == 12);
}

TEST_CASE("prime expressions") {
    PrimeExpr a = parse_prime_expr("101");
    CHECK(a.value == BigInt(101));
    CHECK(a.display == "101");
    PrimeExpr b = parse_prime_expr("10^3+7");
    CHECK(b.value == BigInt(1007));
    PrimeExpr c = parse_prime_expr("10^3-3");
    CHECK(c.value == BigInt(997));
    PrimeExpr d = parse_prime_expr("10^1000+453");
    CHECK(d.value == pow(BigInt(10), 1000) + BigInt(453));
    CHECK_THROWS_AS(parse_prime_expr("2^10+1"), parse_error);
    CHECK_THROWS_AS(parse_prime_expr("10^+1"), parse_error);
}
