#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "capax/surd.hpp"
#include "capax/value.hpp"

using capax::Rational;
using capax::SqrtValue;
using capax::Surd;

TEST_CASE("sqrt_compare spec cases") {
    // sqrt(2) vs 3/2: 2 < 9/4
    CHECK(capax::sqrt_compare(SqrtValue::sqrt_of(Rational(2)), Rational(3, 2)) < 0);
    // 2*sqrt(1/4) == 1
    CHECK(capax::sqrt_compare(SqrtValue(Rational(2), Rational(1, 4)), Rational(1)) == 0);
    // sqrt(8/2) == 2
    CHECK(capax::sqrt_compare(SqrtValue::sqrt_of(Rational(8, 2)), Rational(2)) == 0);
    // negative rationals always compare below
    CHECK(capax::sqrt_compare(SqrtValue::sqrt_of(Rational(2)), Rational(-5)) > 0);
}

TEST_CASE("sqrt value reduces perfect squares") {
    SqrtValue v = SqrtValue::sqrt_of(Rational(9, 4));
    CHECK(v.is_rational());
    CHECK(v.as_rational() == Rational(3, 2));
    CHECK_FALSE(SqrtValue::sqrt_of(Rational(2)).is_rational());
    CHECK(SqrtValue(Rational(0), Rational(7)).is_rational());
}

TEST_CASE("sqrt_compare agrees with floating point on random inputs") {
    std::mt19937_64 rng(987654);
    std::uniform_int_distribution<long long> num(0, 500);
    std::uniform_int_distribution<long long> den(1, 60);
    for (int t = 0; t < 1000; ++t) {
        SqrtValue u(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        SqrtValue v(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        double du = u.to_double(), dv = v.to_double();
        int exact = u.compare(v);
        if (std::abs(du - dv) > 1e-7 * (1.0 + std::abs(du) + std::abs(dv))) {
            // Floating point is the sanity side; the exact path is authoritative.
            CHECK(exact == (du < dv ? -1 : 1));
        }
    }
}

TEST_CASE("surd arithmetic and signs") {
    Surd r2 = Surd::sqrt_of(Rational(2));
    CHECK((r2 - Rational(1)).sign() > 0);
    CHECK((r2 - Rational(2)).sign() < 0);
    CHECK((r2 * r2).as_rational() == Rational(2));
    CHECK(Surd(Rational(-3), Rational(1), Rational(9)).as_rational() == Rational(0));

    // (1 + sqrt(2))^2 = 3 + 2*sqrt(2)
    Surd s(Rational(1), Rational(1), Rational(2));
    CHECK(s.squared() == Surd(Rational(3), Rational(2), Rational(2)));

    // Cross-radicand comparison: 1 + sqrt(2) vs sqrt(6)
    CHECK(Surd(Rational(1), Rational(1), Rational(2)).compare(Surd::sqrt_of(Rational(6))) < 0);
    // sqrt(2) + sqrt(3) vs sqrt(10) - fails only if squaring logic is wrong
    CHECK(capax::sign_with_two_sqrts(Rational(0), Rational(1), Rational(2), Rational(1),
                                     Rational(3)) > 0);
}

TEST_CASE("surd comparisons agree with floating point") {
    std::mt19937_64 rng(13579);
    std::uniform_int_distribution<long long> c(-40, 40);
    std::uniform_int_distribution<long long> d(0, 80);
    for (int t = 0; t < 1000; ++t) {
        Surd a(Rational(c(rng)), Rational(c(rng)), Rational(d(rng)));
        Surd b(Rational(c(rng)), Rational(c(rng)), Rational(d(rng)));
        int exact = a.compare(b);
        double fa = a.to_double(), fb = b.to_double();
        if (std::abs(fa - fb) > 1e-7 * (1.0 + std::abs(fa) + std::abs(fb))) {
            CHECK(exact == (fa < fb ? -1 : 1));
        } else {
            // Near-ties: only verify the exact path is self-consistent.
            CHECK(exact == -b.compare(a));
        }
    }
}

TEST_CASE("rational_between separates exact values") {
    Surd lo = Surd::sqrt_of(Rational(2));
    Surd hi(Rational(0), Rational(1), Rational(2049, 1024)); // barely above sqrt(2)
    Rational mid = capax::rational_between(lo, hi);
    CHECK(lo.compare(Surd(mid)) < 0);
    CHECK(Surd(mid).compare(hi) < 0);

    Rational m2 = capax::rational_between(Surd(Rational(1)), Surd(Rational(2)));
    CHECK(m2 == Rational(3, 2));
}

TEST_CASE("nested sign helpers") {
    // sqrt(3) vs sqrt(1 + sqrt(2)): 3 > 1 + sqrt(2)
    Surd inner(Rational(1), Rational(1), Rational(2));
    CHECK(capax::sign_surd_plus_sqrt(Surd(Rational(-3)), Rational(1),
                                     inner.squared()) < 0);
    // sqrt(X) + sqrt(X) - 2*sqrt(X) = 0 with X = 5 + sqrt(2)
    Surd x(Rational(5), Rational(1), Rational(2));
    CHECK(capax::sign_surd_plus_two_sqrts(Surd(Rational(0)), Rational(2), x, Rational(-2), x) == 0);
}
