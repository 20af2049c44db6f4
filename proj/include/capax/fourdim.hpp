#pragma once

#include <optional>
#include <vector>

#include "capax/capacities.hpp"
#include "capax/curve.hpp"
#include "capax/toric.hpp"

namespace capax::fourdim {

// Termwise comparison N_k(1,a) <= lambda * N_k(1,b).
struct DominanceResult {
    bool holds = false;
    std::optional<long> witness_k;  // first violated index when holds is false
    long checked_through = 0;       // largest index verified termwise
    bool tail_certified = false;    // violation-free beyond checked_through, proven
};

namespace detail {

// Closed-form tail control for the lattice sequences, from two-sided counts
// of {(m,n) : m + n*c <= t}:
//   count_c(t) >  t(t+c)/(2c)         (sum bounded below by its endpoints),
//   count_c(t) <= (2t+2+c)^2/(8c)     (concave upper envelope of the sum),
// giving for every k >= 0
//   N_k(1,a) <= (-a + sqrt(a^2 + 8a(k+1)))/2      =: upper_a(k)
//   N_k(1,b) >= (-(2+b) + sqrt(8b(k+1)))/2        =: lower_b(k).
// Both bounds grow like sqrt(2ck), so the implied tail ratio converges to
// the volume ratio sqrt(a/b) and certification fires whenever the computed
// sup strictly exceeds the volume.  (A rectangle count (N+1)(N/b+1) >= k+1
// also bounds N_k(1,b) from below, but its tail ratio converges to
// sqrt(2a/b) and can never certify a step value; the unit tests validate
// all of these inequalities by brute force.)
inline Surd tail_upper_a(const Rational& a, long k) {
    Rational disc = a.squared() + Rational(8) * a * Rational(k + 1);
    return Surd(-a / 2, Rational(1, 2), disc);
}

inline Surd tail_lower_b(const Rational& b, long k) {
    Rational disc = Rational(8) * b * Rational(k + 1);
    return Surd(-(Rational(2) + b) / 2, Rational(1, 2), disc);
}

// True when cand * N_k(1,b) >= N_k(1,a) for every k > depth.  Needs
// cand >= sqrt(a/b); then D(s) = cand*lower_b - upper_a is increasing in
// s = sqrt(k+1) (its derivative is at least cand*sqrt(2b) - sqrt(2a)/2 > 0),
// so checking k = depth+1 settles the whole tail.
inline bool tail_certifies(const Rational& a, const Rational& b, const Rational& cand,
                           long depth) {
    if (cand.sign() <= 0 || cand.squared() * b < a) return false;
    long k0 = depth + 1;
    Surd lower = tail_lower_b(b, k0);
    if (lower.sign() <= 0) return false;
    return lower.scaled(cand).compare(tail_upper_a(a, k0)) >= 0;
}

} // namespace detail

// Check the dominance criterion termwise through `depth` and attempt to
// close the tail with the certified truncation bound.
inline DominanceResult dominance(const Rational& a, const Rational& b, const Rational& lambda,
                                 long depth) {
    if (a < Rational(1) || b < Rational(1)) throw InvalidParameter("dominance requires a, b >= 1");
    if (lambda.sign() <= 0) throw InvalidParameter("dominance requires lambda > 0");
    if (depth < 1) throw InvalidParameter("dominance requires depth >= 1");

    auto sa = capacities::detail::ech_prefix_scaled(Rational(1), a,
                                                    static_cast<std::size_t>(depth) + 1);
    auto sb = capacities::detail::ech_prefix_scaled(Rational(1), b,
                                                    static_cast<std::size_t>(depth) + 1);
    DominanceResult res;
    res.checked_through = depth;
    // Na/qa <= lambda * Nb/qb, cross-multiplied to integers.
    BigInt left_factor = lambda.den() * sb.denom;
    BigInt right_factor = lambda.num() * sa.denom;
    for (long k = 1; k <= depth; ++k) {
        if (sa.values[k] * left_factor > sb.values[k] * right_factor) {
            res.holds = false;
            res.witness_k = k;
            return res;
        }
    }
    res.holds = true;
    res.tail_certified = detail::tail_certifies(a, b, lambda, depth);
    return res;
}

// Unstabilized ellipsoid-target embedding function by sequence dominance:
// the larger of the volume ratio and the sup of termwise ratios.  Exact when
// the truncation certificate closes the tail, otherwise best-so-far and
// conjectural.  (A value equal to the volume can never certify: the tail
// bound approaches the volume strictly from above.)
struct C0Result {
    Value value = Rational(1);
    SegmentStatus status = SegmentStatus::Conjectural;
    std::optional<long> witness_k; // index attaining the sup when it beats volume
};

inline C0Result c0_ell(const Rational& a, const Rational& b, long depth = 50000) {
    if (a < Rational(1) || b < Rational(1)) throw InvalidParameter("c0_ell requires a, b >= 1");
    if (depth < 1) throw InvalidParameter("c0_ell requires depth >= 1");

    auto sa = capacities::detail::ech_prefix_scaled(Rational(1), a,
                                                    static_cast<std::size_t>(depth) + 1);
    auto sb = capacities::detail::ech_prefix_scaled(Rational(1), b,
                                                    static_cast<std::size_t>(depth) + 1);
    BigInt bn = sa.values[1], bd = sb.values[1];
    long best_k = 1;
    for (long k = 2; k <= depth; ++k) {
        if (sa.values[k] * bd > bn * sb.values[k]) {
            bn = sa.values[k];
            bd = sb.values[k];
            best_k = k;
        }
    }
    Rational sup = Rational(bn * sb.denom, bd * sa.denom);

    C0Result out;
    SqrtValue volume = SqrtValue::sqrt_of(a / b);
    if (volume.compare(sup) > 0) {
        out.value = make_value(volume);
        out.status = SegmentStatus::Conjectural;
    } else {
        out.value = make_value(sup);
        out.witness_k = best_k;
        out.status = detail::tail_certifies(a, b, sup, depth) ? SegmentStatus::Exact
                                                              : SegmentStatus::Conjectural;
    }
    return out;
}

// One linear step of the polydisc-target embedding function: the slope piece
// through the origin on [u, corner], then the plateau out to v where the
// volume curve catches up.
struct StepDescription {
    long k = 0;
    Rational u;            // (2b+k)^2 / (2b)
    Rational v;            // 2b * ((2b+2k+1)/(2b+k))^2
    Rational corner;       // 2b+2k+1
    Rational corner_value; // (2b+2k+1)/(2b+k)
};

inline long step_count(long b) {
    return isqrt(BigInt(2 * b)).convert_to<long>(); // floor(sqrt(2b))
}

inline StepDescription step_description(long b, long k) {
    if (b < 2) throw InvalidParameter("steps are defined for integer b >= 2");
    if (k < 0 || k > step_count(b)) throw InvalidParameter("step index out of range");
    Rational two_b(2 * b);
    Rational slope_den = two_b + Rational(k);
    StepDescription s;
    s.k = k;
    s.u = slope_den.squared() / two_b;
    s.corner = two_b + Rational(2 * k + 1);
    s.corner_value = s.corner / slope_den;
    s.v = two_b * s.corner_value.squared();
    // u <= corner <= v, with all three equal exactly when k^2 = 2b (the last
    // step of a perfect-square 2b degenerates to one point).
    if (s.u > s.corner || s.corner > s.v)
        throw InconsistentBounds("malformed step data for b = " + std::to_string(b));
    return s;
}

inline std::vector<StepDescription> steps(long b) {
    std::vector<StepDescription> out;
    for (long k = 0; k <= step_count(b); ++k) out.push_back(step_description(b, k));
    return out;
}

// The polydisc-target embedding function for integer b >= 2 on [1, a_max]:
// constant 1 until the first step lifts off at a = 2b, the linear steps on
// [u_k, v_k], and the volume sqrt(a/(2b)) elsewhere.  The one inter-step gap
// containing a = 2b+4 holds the affine step, whose formula is outside this
// library's scope; that whole gap carries the volume curve marked
// LowerBoundOnly rather than a guessed formula.
inline PiecewiseCurve c0_poly_piecewise(long b, Rational a_max = Rational(0)) {
    if (b < 2) throw InvalidParameter("c0_poly_piecewise requires integer b >= 2");
    auto all = steps(b);
    Rational two_b(2 * b);
    Rational volume_sq = Rational(1) / two_b;          // value^2 = a/(2b)
    Rational affine_marker = two_b + Rational(4);      // lies in the affine-step gap
    if (a_max < all.back().v + Rational(1)) a_max = all.back().v + Rational(1);

    PiecewiseCurve curve{Surd(Rational(1))};
    Rational cursor(1);
    auto append = [&](const Rational& to, SegmentFormula f, SegmentStatus st) {
        if (to > cursor) {
            curve.append(Surd(to), std::move(f), st);
            cursor = to;
        }
    };

    append(all.front().u, constant_formula(Rational(1)), SegmentStatus::Exact);
    for (const auto& s : all) {
        append(s.corner, affine_formula(Rational(1) / (two_b + Rational(s.k)), Rational(0)),
               SegmentStatus::Exact);
        append(s.v, constant_formula(s.corner_value), SegmentStatus::Exact);
        // Gap to the next step (or the tail after the last one).
        Rational gap_end = s.k < step_count(b) ? step_description(b, s.k + 1).u : a_max;
        bool is_affine_gap = cursor < affine_marker && affine_marker < gap_end;
        append(gap_end, sqrt_formula_sq(volume_sq),
               is_affine_gap ? SegmentStatus::LowerBoundOnly : SegmentStatus::Exact);
    }
    if (cursor < a_max) append(a_max, sqrt_formula_sq(volume_sq), SegmentStatus::Exact);

    if (!curve.exact_joints_agree())
        throw InconsistentBounds("polydisc curve is discontinuous at an exact joint");
    return curve;
}

// Unstabilized polydisc-target queries route through the ellipsoid function:
// for integer b the two problems are equivalent with ellipsoid parameter 2b.
struct EquivalenceRecord {
    Rational a;
    long poly_b = 1;
    long ell_b = 2;
};

inline EquivalenceRecord equiv_poly_ell(const Rational& a, const Rational& b) {
    if (!b.is_integer() || b < Rational(1))
        throw NonIntegerB("the polydisc/ellipsoid equivalence needs integer b >= 1");
    long bi = b.num().convert_to<long>();
    return EquivalenceRecord{a, bi, 2 * bi};
}

inline C0Result c0_poly(const Rational& a, const Rational& b, long depth = 50000) {
    EquivalenceRecord eq = equiv_poly_ell(a, b);
    return c0_ell(a, Rational(eq.ell_b), depth);
}

} // namespace capax::fourdim
