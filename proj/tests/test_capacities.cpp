#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "capax/capacities.hpp"

using namespace capax;
using namespace capax::capacities;

namespace {

// Independent oracle: enumerate m*x (m >= 1) and n*y, sort, index.
std::vector<Rational> eh_oracle(const Rational& x, const Rational& y, std::size_t count) {
    std::vector<Rational> all;
    for (std::size_t m = 1; m <= count; ++m) all.push_back(Rational((long long)m) * x);
    for (std::size_t n = 1; n <= count; ++n) all.push_back(Rational((long long)n) * y);
    std::sort(all.begin(), all.end());
    all.resize(count);
    return all;
}

// Independent oracle: enumerate m*x + n*y over a box big enough to hold the
// first `count` values, sort with multiplicity.
std::vector<Rational> ech_oracle(const Rational& x, const Rational& y, std::size_t count) {
    Rational cap = (x + y) * Rational((long long)count);
    std::vector<Rational> all;
    for (long long m = 0; Rational(m) * x <= cap; ++m)
        for (long long n = 0; Rational(m) * x + Rational(n) * y <= cap; ++n)
            all.push_back(Rational(m) * x + Rational(n) * y);
    std::sort(all.begin(), all.end());
    all.resize(count);
    return all;
}

std::mt19937_64 rng(424242);

} // namespace

TEST_CASE("ellipsoid capacities: pinned values") {
    CHECK(gk_ellipsoid(Rational(4), 3).value == Rational(3));
    CHECK(gk_ellipsoid(Rational(4), 3).branch == GkBranch::KLeqA);
    CHECK(gk_ellipsoid(Rational(5), 7).value == Rational(6));
    CHECK(gk_ellipsoid(Rational(5, 4), 5).value == Rational(5, 2));
    CHECK(gk_ellipsoid(Rational(5, 4), 5).branch == GkBranch::SmallAAPlusIA);
    CHECK(gk_ellipsoid(Rational(3, 2), 6).value == Rational(7, 2));
    CHECK_THROWS_AS(gk_ellipsoid(Rational(1, 2), 1), InvalidParameter);
    CHECK_THROWS_AS(gk_ellipsoid(Rational(2), 0), InvalidParameter);
}

TEST_CASE("ellipsoid capacities: both formulas agree at the a = 3/2 boundary") {
    Rational a(3, 2);
    for (long k = 1; k <= 200; ++k) {
        CapacityValue small = capacities::detail::gk_ellipsoid_small(a, k);
        CapacityValue large = capacities::detail::gk_ellipsoid_large(a, k);
        REQUIRE(small.value == large.value);
    }
}

TEST_CASE("polydisc capacities") {
    CHECK(gk_polydisc(Rational(2), 5).value == Rational(4));
    CHECK(gk_polydisc(Rational(3), 7).value == Rational(6));
    CHECK(gk_polydisc(Rational(1), 1).value == Rational(1));
    CHECK_THROWS_AS(gk_polydisc(Rational(2), 4), EvenIndexNotProven);
    auto even = gk_polydisc(Rational(2), 4, true);
    CHECK(even.conjectural);
    CHECK(even.value == Rational(4)); // min(4, 2+2)
}

TEST_CASE("gk monotone in the domain parameter") {
    std::vector<Rational> grid;
    for (int n = 4; n <= 40; ++n) grid.emplace_back(n, 4);
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        for (long k = 1; k <= 25; ++k)
            CHECK(gk_ellipsoid(grid[i], k).value <= gk_ellipsoid(grid[i + 1], k).value);
}

TEST_CASE("eh sequence: pinned values and oracle") {
    CHECK(eh_ellipsoid(Rational(1), Rational(1), 3) == Rational(2));
    CHECK(eh_ellipsoid(Rational(1), Rational(6), 13) == Rational(12));
    CHECK(eh_ellipsoid(Rational(1), Rational(3), 5) == Rational(4));

    for (auto [x, y] : {std::pair{Rational(1), Rational(1)}, {Rational(1), Rational(5, 3)},
                        {Rational(2, 3), Rational(7, 2)}, {Rational(1), Rational(8)}}) {
        auto fast = eh_prefix(x, y, 60);
        auto slow = eh_oracle(x, y, 60);
        REQUIRE(fast == slow);
    }
}

TEST_CASE("eh is nondecreasing") {
    auto seq = eh_prefix(Rational(1), Rational(7, 3), 200);
    CHECK(std::is_sorted(seq.begin(), seq.end()));
}

TEST_CASE("eh capacity at index p+q-1 recovers the numerator") {
    // For coprime p, q with p + q even, the (p+q-1)-th capacity of
    // E(1, p/q) equals p.  Subset here; the acceptance suite covers p <= 60.
    for (long p = 1; p <= 25; ++p)
        for (long q = 1; q <= p; ++q) {
            if (boost::multiprecision::gcd(BigInt(p), BigInt(q)) != 1) continue;
            if ((p + q) % 2 != 0) continue;
            CHECK(eh_ellipsoid(Rational(1), Rational(p, q), p + q - 1) == Rational(p));
        }
}

TEST_CASE("ech sequence: pinned values and oracle") {
    CHECK(ech_N(Rational(1), Rational(1), 0) == Rational(0));
    CHECK(ech_N(Rational(1), Rational(1), 4) == Rational(2));
    CHECK(ech_N(Rational(1), Rational(2), 3) == Rational(2));
    CHECK(ech_prefix(Rational(1), Rational(1), 5) ==
          std::vector<Rational>{Rational(0), Rational(1), Rational(1), Rational(2), Rational(2)});
    CHECK(ech_prefix(Rational(1), Rational(4), 6) ==
          std::vector<Rational>{Rational(0), Rational(1), Rational(2), Rational(3), Rational(4),
                                Rational(4)});

    for (auto [x, y] : {std::pair{Rational(1), Rational(1)}, {Rational(1), Rational(5, 2)},
                        {Rational(3, 4), Rational(2)}, {Rational(1), Rational(6)}}) {
        auto fast = ech_prefix(x, y, 80);
        auto slow = ech_oracle(x, y, 80);
        REQUIRE(fast == slow);
    }
}

TEST_CASE("ech prefix is consistent with single queries") {
    auto pre = ech_prefix(Rational(1), Rational(3, 2), 40);
    for (std::size_t n = 1; n <= 40; ++n)
        CHECK(pre[n - 1] == ech_N(Rational(1), Rational(3, 2), (long)n - 1));
}

TEST_CASE("ech scaling invariance") {
    std::uniform_int_distribution<long long> small(1, 12);
    for (int t = 0; t < 20; ++t) {
        Rational x(small(rng), small(rng)), y(small(rng), small(rng));
        Rational c(small(rng), small(rng));
        for (long k : {1L, 5L, 17L, 40L})
            CHECK(ech_N(x * c, y * c, k) == c * ech_N(x, y, k));
    }
}

TEST_CASE("ech of the round ball repeats each integer m+1 times") {
    auto seq = ech_prefix(Rational(1), Rational(1), 210);
    std::size_t idx = 0;
    for (long m = 0; idx < seq.size(); ++m)
        for (long rep = 0; rep <= m && idx < seq.size(); ++rep, ++idx)
            REQUIRE(seq[idx] == Rational(m));
}

TEST_CASE("weight sequences: pinned values") {
    CHECK(weight_sequence(Rational(3)).weights ==
          std::vector<Rational>{Rational(1), Rational(1), Rational(1)});
    CHECK(weight_sequence(Rational(1)).weights == std::vector<Rational>{Rational(1)});
    CHECK(weight_sequence(Rational(5, 2)).weights ==
          std::vector<Rational>{Rational(1), Rational(1), Rational(1, 2), Rational(1, 2)});
    CHECK_THROWS_AS(weight_sequence(Rational(1, 2)), InvalidParameter);
}

TEST_CASE("weight sequence identities across random rationals") {
    std::uniform_int_distribution<long long> num(1, 400);
    std::uniform_int_distribution<long long> den(1, 20);
    int tested = 0;
    while (tested < 200) {
        Rational a(num(rng), den(rng));
        if (a < Rational(1) || a > Rational(20)) continue;
        ++tested;
        auto ws = weight_sequence(a); // identities asserted inside
        Rational q(BigInt(1), a.den());
        Rational sum(0), sum_sq(0);
        for (auto& w : ws.weights) {
            CHECK(w.sign() > 0);
            sum += w;
            sum_sq += w.squared();
        }
        CHECK(sum_sq == a);
        CHECK(sum == a + Rational(1) - q);
        CHECK(std::is_sorted(ws.weights.rbegin(), ws.weights.rend()));
    }
}
