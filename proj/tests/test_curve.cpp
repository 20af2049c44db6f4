#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "capax/curve.hpp"

using namespace capax;

namespace {

PiecewiseCurve constant_one(Rational lo, Rational hi) {
    PiecewiseCurve c{Surd(lo)};
    c.append(Surd(hi), constant_formula(Rational(1)), SegmentStatus::Exact);
    return c;
}

} // namespace

TEST_CASE("curve eval basics") {
    // Staircase start: 0 at the origin.
    PiecewiseCurve stairs{Surd(Rational(0))};
    stairs.append(Surd(Rational(1)), affine_formula(Rational(1), Rational(0)), SegmentStatus::Exact);
    stairs.append(Surd(Rational(2)), constant_formula(Rational(1)), SegmentStatus::Exact);
    auto r = stairs.eval(Rational(0));
    CHECK(r.value.as_rational() == Rational(0));
    CHECK(r.status == SegmentStatus::Exact);

    // Affine(slope 1, intercept -1) at a=3 gives 2.
    PiecewiseCurve aff{Surd(Rational(0))};
    aff.append(Surd(Rational(5)), affine_formula(Rational(1), Rational(-1)), SegmentStatus::Exact);
    CHECK(aff.eval(Rational(3)).value.as_rational() == Rational(2));

    // sqrt segment at a perfect square collapses to a rational.
    PiecewiseCurve vol{Surd(Rational(0))};
    vol.append(Surd(Rational(16)), sqrt_formula(Rational(1)), SegmentStatus::Exact);
    auto v = vol.eval(Rational(9));
    CHECK(v.value.is_rational());
    CHECK(v.value.as_rational() == Rational(3));

    CHECK_THROWS_AS(vol.eval(Rational(17)), OutOfDomain);
    CHECK_THROWS_AS(vol.eval(Rational(-1)), OutOfDomain);
    // Right domain endpoint evaluates with the last segment.
    CHECK(vol.eval(Rational(16)).value.as_rational() == Rational(4));
}

TEST_CASE("curve max crossing of line and volume piece") {
    // Line through the origin with slope 1/4 against sqrt(a/4): the exact
    // crossing is at a = 4 with value 1 (solve a/4 = sqrt(a)/2).
    PiecewiseCurve line{Surd(Rational(1))};
    line.append(Surd(Rational(9)), affine_formula(Rational(1, 4), Rational(0)),
                SegmentStatus::Exact);
    PiecewiseCurve vol{Surd(Rational(1))};
    vol.append(Surd(Rational(9)), sqrt_formula(Rational(1, 2)), SegmentStatus::Exact);

    PiecewiseCurve m = curve_max(line, vol);
    REQUIRE(m.size() == 2);
    CHECK(m.breakpoint(1) == Surd(Rational(4)));
    // sqrt wins left of the crossing, the line wins right of it.
    CHECK(m.segment(0).formula == sqrt_formula(Rational(1, 2)));
    CHECK(m.segment(1).formula == affine_formula(Rational(1, 4), Rational(0)));
    CHECK(m.eval(Rational(4)).value.as_rational() == Rational(1));
}

TEST_CASE("curve max with irrational crossing keeps exact breakpoint") {
    // a - 1 = sqrt(a) crosses at (3+sqrt(5))/2, the positive root of
    // a^2 - 3a + 1 inside the domain.
    PiecewiseCurve aff{Surd(Rational(1))};
    aff.append(Surd(Rational(9)), affine_formula(Rational(1), Rational(-1)), SegmentStatus::Exact);
    PiecewiseCurve vol{Surd(Rational(1))};
    vol.append(Surd(Rational(9)), sqrt_formula(Rational(1)),
               SegmentStatus::Exact);
    // crossing of a-1 = sqrt(a): a^2 - 3a + 1 = 0, root (3+sqrt(5))/2 in range
    PiecewiseCurve m = curve_max(aff, vol);
    REQUIRE(m.size() == 2);
    Surd expected(Rational(3, 2), Rational(1, 2), Rational(5));
    CHECK(m.breakpoint(1) == expected);
}

TEST_CASE("curve max constant vs dominated sqrt") {
    PiecewiseCurve one = constant_one(Rational(1), Rational(3));
    PiecewiseCurve small{Surd(Rational(1))};
    small.append(Surd(Rational(3)), sqrt_formula(Rational(1, 10)), SegmentStatus::Exact);
    PiecewiseCurve m = curve_max(one, small);
    CHECK(m.size() == 1);
    CHECK(m.segment(0).formula == constant_formula(Rational(1)));
}

TEST_CASE("curve max properties") {
    std::vector<PiecewiseCurve> pool;
    {
        PiecewiseCurve c{Surd(Rational(0))};
        c.append(Surd(Rational(4)), affine_formula(Rational(1, 2), Rational(0)),
                 SegmentStatus::Exact);
        c.append(Surd(Rational(10)), constant_formula(Rational(2)), SegmentStatus::Exact);
        pool.push_back(c);
    }
    {
        PiecewiseCurve c{Surd(Rational(0))};
        c.append(Surd(Rational(10)), sqrt_formula(Rational(2, 3)), SegmentStatus::Exact);
        pool.push_back(c);
    }
    {
        PiecewiseCurve c{Surd(Rational(0))};
        c.append(Surd(Rational(5)), affine_formula(Rational(1, 3), Rational(1, 2)),
                 SegmentStatus::Exact);
        c.append(Surd(Rational(10)), sqrt_formula_sq(Rational(1), Rational(-2), Rational(0)),
                 SegmentStatus::LowerBoundOnly);
        pool.push_back(c);
    }

    for (const auto& c : pool) {
        // Idempotence.
        CHECK(curve_max(c, c) == c.normalized());
    }
    for (const auto& a : pool)
        for (const auto& b : pool) {
            // Commutativity up to formula ties.
            PiecewiseCurve ab = curve_max(a, b);
            PiecewiseCurve ba = curve_max(b, a);
            for (int i = 0; i <= 40; ++i) {
                Rational x(i, 4);
                CHECK(ab.eval(x).value == ba.eval(x).value);
            }
        }
    // Associativity pointwise.
    PiecewiseCurve left = curve_max(curve_max(pool[0], pool[1]), pool[2]);
    PiecewiseCurve right = curve_max(pool[0], curve_max(pool[1], pool[2]));
    CHECK(left == right);
}

TEST_CASE("status combination marks lower bounds") {
    PiecewiseCurve exact = constant_one(Rational(0), Rational(2));
    PiecewiseCurve lb{Surd(Rational(0))};
    lb.append(Surd(Rational(2)), constant_formula(Rational(1, 2)), SegmentStatus::LowerBoundOnly);
    PiecewiseCurve m = curve_max(exact, lb);
    REQUIRE(m.size() == 1);
    CHECK(m.segment(0).status == SegmentStatus::LowerBoundOnly);
}

TEST_CASE("exact joints detection") {
    PiecewiseCurve good{Surd(Rational(0))};
    good.append(Surd(Rational(2)), affine_formula(Rational(1), Rational(0)), SegmentStatus::Exact);
    good.append(Surd(Rational(4)), constant_formula(Rational(2)), SegmentStatus::Exact);
    CHECK(good.exact_joints_agree());

    PiecewiseCurve bad{Surd(Rational(0))};
    bad.append(Surd(Rational(2)), affine_formula(Rational(1), Rational(0)), SegmentStatus::Exact);
    bad.append(Surd(Rational(4)), constant_formula(Rational(3)), SegmentStatus::Exact);
    CHECK_FALSE(bad.exact_joints_agree());
}

TEST_CASE("disjoint domains rejected") {
    PiecewiseCurve a = constant_one(Rational(0), Rational(1));
    PiecewiseCurve b = constant_one(Rational(2), Rational(3));
    CHECK_THROWS_AS(curve_max(a, b), DisjointDomains);
}
