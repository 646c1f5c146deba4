#include <doctest.h>

#include <cstdint>
#include <random>

#include "qlab/bigint.hpp"
#include "qlab/error.hpp"

using namespace qlab;

TEST_CASE("BigInt arithmetic agrees with int64 on random small operands") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int64_t> dist(-1000000, 1000000);
    for (int i = 0; i < 500; ++i) {
        const int64_t a = dist(rng), b = dist(rng);
        CHECK((BigInt(a) + BigInt(b)).to_long() == a + b);
        CHECK((BigInt(a) - BigInt(b)).to_long() == a - b);
        CHECK((BigInt(a) * BigInt(b)).to_long() == a * b);
        if (b != 0) {
            CHECK((BigInt(a) / BigInt(b)).to_long() == a / b);
            CHECK((BigInt(a) % BigInt(b)).to_long() == a % b);
        }
    }
}

TEST_CASE("BigInt big values round-trip through strings") {
    const BigInt a("123456789012345678901234567890");
    CHECK(a.str() == "123456789012345678901234567890");
    CHECK((a * a).str() == "15241578753238836750495351562536198787501905199875019052100");
    CHECK(!a.fits_long());
    CHECK_THROWS_AS(BigInt("12x"), UsageError);
}

TEST_CASE("BigInt gcd and exact division") {
    CHECK(gcd(BigInt(48), BigInt(-18)) == BigInt(6));
    CHECK(gcd(BigInt(0), BigInt(0)) == BigInt(0));
    CHECK(BigInt(91).divisible_by(7));
    CHECK(BigInt(91).divexact(7) == BigInt(13));
    CHECK(BigInt(2).pow(100).str() == "1267650600228229401496703205376");
}

TEST_CASE("BigRational canonical form") {
    CHECK(BigRational(6, -4) == BigRational(-3, 2));
    CHECK(BigRational(6, -4).denominator() == BigInt(2));
    CHECK(BigRational(0, 5) == BigRational(0));
    CHECK(BigRational(8, 3).str() == "8/3");
    CHECK(BigRational(-8, 4).str() == "-2");
    CHECK_THROWS_AS(BigRational(1, 0), UsageError);
}

TEST_CASE("BigRational field operations") {
    const BigRational a(3, 7), b(-2, 5);
    CHECK(a + b == BigRational(1, 35));
    CHECK(a * b == BigRational(-6, 35));
    CHECK(a / b == BigRational(-15, 14));
    CHECK(a.inverse() == BigRational(7, 3));
    CHECK(a.pow(-2) == BigRational(49, 9));
    CHECK(BigRational(1, 2).pow(3) == BigRational(1, 8));
    CHECK(a < BigRational(1, 2));
    CHECK_THROWS_AS(BigRational(0).inverse(), UsageError);
}

TEST_CASE("factorial and binomial helpers") {
    CHECK(factorial(0) == BigInt(1));
    CHECK(factorial(6) == BigInt(720));
    CHECK(binomial(5, 2) == BigInt(10));
    CHECK(binomial(4, 0) == BigInt(1));
}
