#pragma once

#include <queue>
#include <vector>

#include "capax/rational.hpp"

namespace capax {
namespace capacities {

// Which case of the closed-form capacity formulas produced a value.  The
// small-a cases cover 1 <= a <= 3/2 by the residue of k mod 3; the large-a
// cases cover a > 3/2 by the parity of k - ceil(a).
enum class GkBranch {
    KLeqA,           // value k while k <= a
    SmallAOnePlusIA, // k = 1+3i -> 1 + i*a
    SmallAAPlusIA,   // k = 2+3i -> a + i*a
    SmallATwoPlusIA, // k = 3+3i -> 2 + i*a
    CeilPlus2i,      // k = ceil(a) + 2i   -> a + i
    CeilPlus2iPlus1, // k = ceil(a) + 2i+1 -> ceil(a) + i
    MinLeft,         // polydisc min() selected k
    MinRight,        // polydisc min() selected a + (k-1)/2
};

inline const char* branch_name(GkBranch b) {
    switch (b) {
        case GkBranch::KLeqA: return "k<=a";
        case GkBranch::SmallAOnePlusIA: return "small-a:1+ia";
        case GkBranch::SmallAAPlusIA: return "small-a:a+ia";
        case GkBranch::SmallATwoPlusIA: return "small-a:2+ia";
        case GkBranch::CeilPlus2i: return "large-a:a+i";
        case GkBranch::CeilPlus2iPlus1: return "large-a:ceil(a)+i";
        case GkBranch::MinLeft: return "poly:k";
        default: return "poly:a+(k-1)/2";
    }
}

struct CapacityValue {
    Rational value;
    GkBranch branch;
    bool conjectural = false;
};

namespace detail {

// Valid for 1 <= a <= 3/2.
inline CapacityValue gk_ellipsoid_small(const Rational& a, long k) {
    long i = (k - 1) / 3;
    switch ((k - 1) % 3) {
        case 0: return {Rational(1) + Rational(i) * a, GkBranch::SmallAOnePlusIA};
        case 1: return {a + Rational(i) * a, GkBranch::SmallAAPlusIA};
        default: return {Rational(2) + Rational(i) * a, GkBranch::SmallATwoPlusIA};
    }
}

// Valid for a > 3/2 (and for a = 3/2, where it must agree with the small-a
// formula; the public function asserts that).
inline CapacityValue gk_ellipsoid_large(const Rational& a, long k) {
    if (Rational(k) <= a) return {Rational(k), GkBranch::KLeqA};
    long ceil_a = a.ceil().convert_to<long>();
    long diff = k - ceil_a;
    long i = diff / 2;
    if (diff % 2 == 0) return {a + Rational(i), GkBranch::CeilPlus2i};
    return {Rational(ceil_a) + Rational(i), GkBranch::CeilPlus2iPlus1};
}

} // namespace detail

// Capacity sequence of the ellipsoid E(1,a), exact rational output.
inline CapacityValue gk_ellipsoid(const Rational& a, long k) {
    if (a < Rational(1)) throw InvalidParameter("gk_ellipsoid requires a >= 1");
    if (k < 1) throw InvalidParameter("gk_ellipsoid requires k >= 1");
    if (Rational(k) <= a) return {Rational(k), GkBranch::KLeqA};
    const Rational boundary(3, 2);
    if (a < boundary) return detail::gk_ellipsoid_small(a, k);
    CapacityValue large = detail::gk_ellipsoid_large(a, k);
    if (a == boundary) {
        CapacityValue small = detail::gk_ellipsoid_small(a, k);
        if (small.value != large.value)
            throw InconsistentBounds("capacity formulas disagree at a = 3/2, k = " +
                                     std::to_string(k));
    }
    return large;
}

// Capacity sequence of the polydisc P(1,a).  Proven for odd k only; the even
// case is available behind an explicit opt-in and is tagged conjectural.
inline CapacityValue gk_polydisc(const Rational& a, long k, bool allow_even_conjectural = false) {
    if (a < Rational(1)) throw InvalidParameter("gk_polydisc requires a >= 1");
    if (k < 1) throw InvalidParameter("gk_polydisc requires k >= 1");
    bool even = (k % 2 == 0);
    if (even && !allow_even_conjectural)
        throw EvenIndexNotProven("gk_polydisc at even k is not proven; pass the conjectural flag");
    // min(k, a + ceil((k-1)/2)); the ceiling equals floor(k/2) for k >= 1.
    Rational right = a + Rational(k / 2);
    Rational left(k);
    CapacityValue out = left <= right ? CapacityValue{left, GkBranch::MinLeft}
                                      : CapacityValue{right, GkBranch::MinRight};
    out.conjectural = even;
    return out;
}

// First `count` entries of the multiset {m*x : m>=1} merged with
// {n*y : n>=1}, nondecreasing, ties kept with multiplicity.
inline std::vector<Rational> eh_prefix(const Rational& x, const Rational& y, std::size_t count) {
    if (x.sign() <= 0 || y.sign() <= 0) throw InvalidParameter("eh_prefix requires x, y > 0");
    std::vector<Rational> out;
    out.reserve(count);
    Rational mx = x, ny = y;
    while (out.size() < count) {
        if (mx <= ny) {
            out.push_back(mx);
            mx += x;
        } else {
            out.push_back(ny);
            ny += y;
        }
    }
    return out;
}

// l-th Ekeland-Hofer capacity of E(x,y), 1-based.
inline Rational eh_ellipsoid(const Rational& x, const Rational& y, long l) {
    if (l < 1) throw InvalidParameter("eh index must be >= 1");
    return eh_prefix(x, y, static_cast<std::size_t>(l)).back();
}

namespace detail {

// Lazy merge of {m*X + n*Y : m,n >= 0} over integers, one heap entry per
// active row; each pair is produced exactly once so multiplicities are
// counted correctly.
inline std::vector<BigInt> lattice_prefix_int(const BigInt& X, const BigInt& Y,
                                              std::size_t count) {
    struct Entry {
        BigInt value;
        BigInt m, n;
    };
    auto cmp = [](const Entry& a, const Entry& b) { return a.value > b.value; };
    std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);
    heap.push({BigInt(0), BigInt(0), BigInt(0)});
    std::vector<BigInt> out;
    out.reserve(count);
    while (out.size() < count && !heap.empty()) {
        Entry e = heap.top();
        heap.pop();
        out.push_back(e.value);
        heap.push({e.value + X, e.m + 1, e.n});
        if (e.m == 0) heap.push({e.value + Y, BigInt(0), e.n + 1});
    }
    return out;
}

struct ScaledPrefix {
    std::vector<BigInt> values;
    BigInt denom;
};

inline ScaledPrefix ech_prefix_scaled(const Rational& x, const Rational& y, std::size_t count) {
    if (x.sign() <= 0 || y.sign() <= 0) throw InvalidParameter("ech requires x, y > 0");
    BigInt q = x.den() / big_gcd(x.den(), y.den()) * y.den();
    BigInt X = x.num() * (q / x.den());
    BigInt Y = y.num() * (q / y.den());
    return {lattice_prefix_int(X, Y, count), q};
}

} // namespace detail

// First `count` terms of the sequence whose k-th entry is the (k+1)-st
// smallest nonnegative integer combination m*x + n*y (with multiplicity).
inline std::vector<Rational> ech_prefix(const Rational& x, const Rational& y, std::size_t count) {
    if (count < 1) throw InvalidParameter("ech_prefix requires count >= 1");
    auto scaled = detail::ech_prefix_scaled(x, y, count);
    std::vector<Rational> out;
    out.reserve(count);
    for (auto& v : scaled.values) out.emplace_back(v, scaled.denom);
    return out;
}

// (k+1)-st smallest entry (0-indexed k), so ech_N(x, y, 0) = 0 always.
inline Rational ech_N(const Rational& x, const Rational& y, long k) {
    if (k < 0) throw InvalidParameter("ech index must be >= 0");
    return ech_prefix(x, y, static_cast<std::size_t>(k) + 1).back();
}

// Finite list of ball sizes carrying the same packing data as E(1,a).
struct WeightSequence {
    std::vector<Rational> weights; // positive, non-increasing
};

// Subtractive continued-fraction expansion: floor(a) unit weights, then the
// fractional remainder rescales the expansion of its reciprocal.  Terminates
// because the continued fraction of a rational is finite.  The two exact
// identities (sum of squares = a, sum = a + 1 - 1/q) are verified before
// returning.
inline WeightSequence weight_sequence(const Rational& a) {
    if (a < Rational(1)) throw InvalidParameter("weight_sequence requires a >= 1");
    WeightSequence ws;
    Rational scale(1);
    Rational x = a;
    while (true) {
        BigInt n = x.floor();
        Rational unit = scale;
        for (BigInt i = 0; i < n; ++i) ws.weights.push_back(unit);
        Rational frac = x - Rational(n);
        if (frac.is_zero()) break;
        scale *= frac;
        x = frac.reciprocal();
    }
    Rational sum(0), sum_sq(0);
    for (const Rational& w : ws.weights) {
        sum += w;
        sum_sq += w.squared();
    }
    if (sum_sq != a || sum != a + Rational(1) - Rational(BigInt(1), a.den()))
        throw InconsistentBounds("weight sequence identities failed for a = " + a.str());
    return ws;
}

} // namespace capacities
} // namespace capax
