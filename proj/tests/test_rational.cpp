#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "capax/rational.hpp"

using capax::BigInt;
using capax::Rational;

namespace {

std::mt19937_64 rng(20240611);

Rational random_rational(long long max_abs = 1000) {
    std::uniform_int_distribution<long long> num(-max_abs, max_abs);
    std::uniform_int_distribution<long long> den(1, max_abs);
    return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

} // namespace

TEST_CASE("rational normalization") {
    CHECK(Rational(BigInt(10), BigInt(-4)) == Rational(BigInt(-5), BigInt(2)));
    CHECK(Rational(BigInt(0), BigInt(-7)).den() == 1);
    CHECK(Rational(BigInt(6), BigInt(3)).is_integer());
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), capax::InvalidParameter);
}

TEST_CASE("rational arithmetic round-trips exactly") {
    for (int t = 0; t < 500; ++t) {
        Rational x = random_rational();
        Rational y = random_rational();
        CHECK((x + y) - y == x);
        if (!y.is_zero()) CHECK((x * y) / y == x);
    }
}

TEST_CASE("floor and ceil") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(4).floor() == 4);
    CHECK(Rational(4).ceil() == 4);
}

TEST_CASE("rational parse and print") {
    CHECK(Rational::parse("3/2") == Rational(3, 2));
    CHECK(Rational::parse("-4/6") == Rational(-2, 3));
    CHECK(Rational::parse("17") == Rational(17));
    CHECK(!Rational::parse("1/0"));
    CHECK(!Rational::parse("a/b"));
    CHECK(!Rational::parse(""));
    CHECK(!Rational::parse("1/2/3"));
    CHECK(Rational(-5, 3).str() == "-5/3");
    CHECK(Rational(8, 2).str() == "4");
    CHECK(Rational::parse(Rational(-355, 113).str()) == Rational(-355, 113));
}

TEST_CASE("perfect square detection") {
    Rational root;
    CHECK(Rational(9, 4).is_perfect_square(&root));
    CHECK(root == Rational(3, 2));
    CHECK_FALSE(Rational(2).is_perfect_square());
    CHECK_FALSE(Rational(-4).is_perfect_square());
    CHECK(Rational(0).is_perfect_square(&root));
    CHECK(root == Rational(0));
}

TEST_CASE("exact double conversion") {
    CHECK(Rational::from_double_exact(0.5) == Rational(1, 2));
    CHECK(Rational::from_double_exact(-3.25) == Rational(-13, 4));
    CHECK(Rational::from_double_exact(10.0) == Rational(10));
    CHECK(Rational::from_double_exact(0.1) != Rational(1, 10)); // 0.1 is not dyadic
}

TEST_CASE("big values stay exact") {
    Rational big(BigInt("123456789012345678901234567890"), BigInt(7));
    CHECK(big * Rational(7) / Rational(7) == big);
    CHECK((big - big).is_zero());
}
