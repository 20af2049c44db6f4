#pragma once

#include <algorithm>
#include <optional>
#include <variant>
#include <vector>

#include "capax/value.hpp"

namespace capax {

enum class SegmentStatus { Exact, LowerBoundOnly, Conjectural };

inline const char* status_name(SegmentStatus s) {
    switch (s) {
        case SegmentStatus::Exact: return "exact";
        case SegmentStatus::LowerBoundOnly: return "lower-bound-only";
        default: return "conjectural";
    }
}

// Result status when two curves are combined: exact only when both inputs
// are exact on the piece; a lower-bound input anywhere makes the combination
// a lower bound (the losing side's true curve may exceed the stored winner).
inline SegmentStatus combine_status(SegmentStatus a, SegmentStatus b) {
    if (a == SegmentStatus::LowerBoundOnly || b == SegmentStatus::LowerBoundOnly)
        return SegmentStatus::LowerBoundOnly;
    if (a == SegmentStatus::Conjectural || b == SegmentStatus::Conjectural)
        return SegmentStatus::Conjectural;
    return SegmentStatus::Exact;
}

// slope * a + intercept
struct AffineSegment {
    Rational slope;
    Rational intercept;
    friend bool operator==(const AffineSegment& x, const AffineSegment& y) {
        return x.slope == y.slope && x.intercept == y.intercept;
    }
};

// sqrt(scale_sq * (a + shift)) + offset, scale_sq > 0.  Storing the square
// of the sqrt coefficient keeps every segment rational-valued in its data:
// the volume piece sqrt(a/(2b)) has scale_sq = 1/(2b) even when 1/sqrt(2b)
// is irrational, and the affine rescaling of a curve stays in the family.
struct SqrtSegment {
    Rational scale_sq;
    Rational shift;
    Rational offset;
    friend bool operator==(const SqrtSegment& x, const SqrtSegment& y) {
        return x.scale_sq == y.scale_sq && x.shift == y.shift && x.offset == y.offset;
    }
};

using SegmentFormula = std::variant<AffineSegment, SqrtSegment>;

inline SegmentFormula affine_formula(Rational slope, Rational intercept) {
    return AffineSegment{std::move(slope), std::move(intercept)};
}
inline SegmentFormula constant_formula(Rational value) {
    return AffineSegment{Rational(0), std::move(value)};
}
// c * sqrt(a) for rational c > 0.
inline SegmentFormula sqrt_formula(const Rational& scale) {
    if (scale.sign() <= 0) throw InvalidParameter("sqrt segment scale must be positive");
    return SqrtSegment{scale.squared(), Rational(0), Rational(0)};
}
inline SegmentFormula sqrt_formula_sq(Rational scale_sq, Rational shift = Rational(0),
                                      Rational offset = Rational(0)) {
    if (scale_sq.sign() <= 0) throw InvalidParameter("sqrt segment scale must be positive");
    return SqrtSegment{std::move(scale_sq), std::move(shift), std::move(offset)};
}

struct Segment {
    SegmentFormula formula;
    SegmentStatus status;
    friend bool operator==(const Segment& a, const Segment& b) {
        return a.formula == b.formula && a.status == b.status;
    }
};

// Exact evaluation at a rational point: affine pieces give rationals, sqrt
// pieces give surds (perfect squares collapse to rationals automatically).
inline Surd eval_formula(const SegmentFormula& f, const Rational& x) {
    if (std::holds_alternative<AffineSegment>(f)) {
        const auto& a = std::get<AffineSegment>(f);
        return Surd(a.slope * x + a.intercept);
    }
    const auto& s = std::get<SqrtSegment>(f);
    Rational under = x + s.shift;
    if (under.sign() < 0) throw OutOfDomain("sqrt segment evaluated left of its shift");
    return Surd(s.offset, Rational(1), s.scale_sq * under);
}

// Trichotomy of f(x) vs g(x) at an exact (possibly irrational) point.
inline int formula_compare_at(const SegmentFormula& f, const SegmentFormula& g, const Surd& x) {
    bool fa = std::holds_alternative<AffineSegment>(f);
    bool ga = std::holds_alternative<AffineSegment>(g);
    if (fa && ga) {
        const auto& u = std::get<AffineSegment>(f);
        const auto& v = std::get<AffineSegment>(g);
        return (x.scaled(u.slope - v.slope) + (u.intercept - v.intercept)).sign();
    }
    if (fa && !ga) {
        const auto& u = std::get<AffineSegment>(f);
        const auto& v = std::get<SqrtSegment>(g);
        Surd lhs = x.scaled(u.slope) + (u.intercept - v.offset);
        return sign_surd_plus_sqrt(lhs, Rational(-1), (x + v.shift).scaled(v.scale_sq));
    }
    if (!fa && ga) return -formula_compare_at(g, f, x);
    const auto& u = std::get<SqrtSegment>(f);
    const auto& v = std::get<SqrtSegment>(g);
    return sign_surd_plus_two_sqrts(Surd(u.offset - v.offset),
                                    Rational(1), (x + u.shift).scaled(u.scale_sq),
                                    Rational(-1), (x + v.shift).scaled(v.scale_sq));
}

namespace detail {

// All points in the open interval (lo, hi) where the two formulas take equal
// values, computed exactly.  Candidates come from squaring; each one is
// verified with formula_compare_at, which filters the spurious roots.
inline std::vector<Surd> formula_crossings(const SegmentFormula& f, const SegmentFormula& g,
                                           const Surd& lo, const Surd& hi) {
    std::vector<Surd> candidates;
    auto quadratic_roots = [&](const Rational& A, const Rational& B, const Rational& C) {
        if (A.is_zero()) {
            if (!B.is_zero()) candidates.emplace_back(-C / B);
            return;
        }
        Rational disc = B.squared() - Rational(4) * A * C;
        if (disc.sign() < 0) return;
        Rational half = Rational(1) / (Rational(2) * A);
        candidates.push_back(Surd(-B, Rational(1), disc).scaled(half));
        candidates.push_back(Surd(-B, Rational(-1), disc).scaled(half));
    };

    bool fa = std::holds_alternative<AffineSegment>(f);
    bool ga = std::holds_alternative<AffineSegment>(g);
    if (fa && ga) {
        const auto& u = std::get<AffineSegment>(f);
        const auto& v = std::get<AffineSegment>(g);
        if (u.slope != v.slope)
            candidates.emplace_back((v.intercept - u.intercept) / (u.slope - v.slope));
    } else if (fa != ga) {
        const auto& u = std::get<AffineSegment>(fa ? f : g);
        const auto& v = std::get<SqrtSegment>(fa ? g : f);
        // s*x + (t - o) = sqrt(q*(x + h)), squared.
        Rational t0 = u.intercept - v.offset;
        quadratic_roots(u.slope.squared(),
                        Rational(2) * u.slope * t0 - v.scale_sq,
                        t0.squared() - v.scale_sq * v.shift);
    } else {
        const auto& u = std::get<SqrtSegment>(f);
        const auto& v = std::get<SqrtSegment>(g);
        Rational d = v.offset - u.offset;
        if (u.shift == v.shift) {
            if (u.scale_sq != v.scale_sq) {
                // sqrt(q1*X) - sqrt(q2*X) = d with X = x + shift:
                // X = d^2 / (sqrt(q1)-sqrt(q2))^2, expanded to clear roots.
                Rational f0 = d.squared() / (u.scale_sq - v.scale_sq).squared();
                Surd X((u.scale_sq + v.scale_sq) * f0, Rational(2) * f0,
                       u.scale_sq * v.scale_sq);
                candidates.push_back(X - u.shift);
            }
        } else {
            // Double squaring of sqrt(q1*(x+h1)) - sqrt(q2*(x+h2)) = d.
            Rational alpha = u.scale_sq + v.scale_sq;
            Rational beta = u.scale_sq * u.shift + v.scale_sq * v.shift - d.squared();
            Rational gamma = Rational(4) * u.scale_sq * v.scale_sq;
            quadratic_roots(alpha.squared() - gamma,
                            Rational(2) * alpha * beta - gamma * (u.shift + v.shift),
                            beta.squared() - gamma * u.shift * v.shift);
        }
    }

    std::vector<Surd> out;
    for (const Surd& c : candidates) {
        if (c.compare(lo) <= 0 || c.compare(hi) >= 0) continue;
        if (formula_compare_at(f, g, c) != 0) continue;
        bool dup = false;
        for (const Surd& s : out) dup = dup || s.compare(c) == 0;
        if (!dup) out.push_back(c);
    }
    std::sort(out.begin(), out.end(), [](const Surd& a, const Surd& b) { return a.compare(b) < 0; });
    return out;
}

} // namespace detail

// A function of one variable given as consecutive intervals with a formula
// and a knowledge status per interval.  Intervals are closed on the left and
// open on the right; the overall right endpoint belongs to the last segment.
// Breakpoints are exact values (rational in the curves built from formulas,
// quadratic surds when pointwise maxima introduce irrational crossings).
class PiecewiseCurve {
public:
    explicit PiecewiseCurve(Surd domain_start) { breaks_.push_back(std::move(domain_start)); }

    PiecewiseCurve& append(Surd end, SegmentFormula formula, SegmentStatus status) {
        if (end.compare(breaks_.back()) <= 0)
            throw InvalidParameter("curve breakpoints must be strictly increasing");
        breaks_.push_back(std::move(end));
        segments_.push_back(Segment{std::move(formula), status});
        return *this;
    }

    std::size_t size() const { return segments_.size(); }
    const Segment& segment(std::size_t i) const { return segments_.at(i); }
    const Surd& breakpoint(std::size_t i) const { return breaks_.at(i); }
    const Surd& domain_lo() const { return breaks_.front(); }
    const Surd& domain_hi() const { return breaks_.back(); }

    bool covers(const Rational& lo, const Rational& hi) const {
        return domain_lo().compare(Surd(lo)) <= 0 && domain_hi().compare(Surd(hi)) >= 0;
    }

    struct EvalResult {
        Surd value;
        SegmentStatus status;
    };

    std::size_t segment_index(const Rational& x) const {
        Surd sx(x);
        if (sx.compare(domain_lo()) < 0 || sx.compare(domain_hi()) > 0)
            throw OutOfDomain("curve evaluated outside its breakpoint range");
        // Last breakpoint belongs to the last segment.
        if (sx.compare(domain_hi()) == 0) return segments_.size() - 1;
        std::size_t lo = 0, hi = segments_.size();
        while (hi - lo > 1) {
            std::size_t mid = (lo + hi) / 2;
            if (breaks_[mid].compare(sx) <= 0)
                lo = mid;
            else
                hi = mid;
        }
        return lo;
    }

    EvalResult eval(const Rational& x) const {
        const Segment& s = segments_[segment_index(x)];
        return EvalResult{eval_formula(s.formula, x), s.status};
    }

    // Like eval, but when x lands exactly on an interior breakpoint and the
    // right-hand segment has weaker status, falls back to the left segment.
    // Grid reports use this so a step corner keeps its exact value.
    EvalResult eval_preferring_exact(const Rational& x) const {
        std::size_t i = segment_index(x);
        if (i > 0 && Surd(x).compare(breaks_[i]) == 0 &&
            segments_[i].status != SegmentStatus::Exact &&
            segments_[i - 1].status == SegmentStatus::Exact) {
            return EvalResult{eval_formula(segments_[i - 1].formula, x), segments_[i - 1].status};
        }
        const Segment& s = segments_[i];
        return EvalResult{eval_formula(s.formula, x), s.status};
    }

    // Adjacent segments that are both exact must agree at their shared
    // breakpoint; curves representing continuous functions assert this.
    bool exact_joints_agree() const {
        for (std::size_t i = 1; i < segments_.size(); ++i) {
            if (segments_[i - 1].status != SegmentStatus::Exact) continue;
            if (segments_[i].status != SegmentStatus::Exact) continue;
            if (formula_compare_at(segments_[i - 1].formula, segments_[i].formula, breaks_[i]) != 0)
                return false;
        }
        return true;
    }

    // Merge adjacent segments with identical formula and status.
    PiecewiseCurve normalized() const {
        PiecewiseCurve out(breaks_.front());
        for (std::size_t i = 0; i < segments_.size(); ++i) {
            if (!out.segments_.empty() && out.segments_.back() == segments_[i])
                out.breaks_.back() = breaks_[i + 1];
            else
                out.append(breaks_[i + 1], segments_[i].formula, segments_[i].status);
        }
        return out;
    }

    friend bool operator==(const PiecewiseCurve& a, const PiecewiseCurve& b) {
        if (a.segments_.size() != b.segments_.size()) return false;
        for (std::size_t i = 0; i < a.breaks_.size(); ++i)
            if (a.breaks_[i].compare(b.breaks_[i]) != 0) return false;
        for (std::size_t i = 0; i < a.segments_.size(); ++i)
            if (!(a.segments_[i] == b.segments_[i])) return false;
        return true;
    }

private:
    std::vector<Surd> breaks_;
    std::vector<Segment> segments_;
};

// Pointwise maximum on the common domain.  Breakpoints of the result include
// every crossing of the two input formulas, computed exactly.
inline PiecewiseCurve curve_max(const PiecewiseCurve& c1, const PiecewiseCurve& c2) {
    Surd lo = c1.domain_lo().compare(c2.domain_lo()) >= 0 ? c1.domain_lo() : c2.domain_lo();
    Surd hi = c1.domain_hi().compare(c2.domain_hi()) <= 0 ? c1.domain_hi() : c2.domain_hi();
    if (lo.compare(hi) >= 0) throw DisjointDomains("curves have no common interval");

    // Refine by the union of both curves' breakpoints inside [lo, hi].
    std::vector<Surd> cuts{lo};
    auto add_cut = [&](const Surd& s) {
        if (s.compare(lo) <= 0 || s.compare(hi) >= 0) return;
        for (const Surd& c : cuts)
            if (c.compare(s) == 0) return;
        cuts.push_back(s);
    };
    for (std::size_t i = 0; i <= c1.size(); ++i) add_cut(c1.breakpoint(i));
    for (std::size_t i = 0; i <= c2.size(); ++i) add_cut(c2.breakpoint(i));
    cuts.push_back(hi);
    std::sort(cuts.begin(), cuts.end(),
              [](const Surd& a, const Surd& b) { return a.compare(b) < 0; });

    PiecewiseCurve out(lo);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const Surd& p = cuts[i];
        const Surd& q = cuts[i + 1];
        Rational probe0 = rational_between(p, q);
        const Segment& s1 = c1.segment(c1.segment_index(probe0));
        const Segment& s2 = c2.segment(c2.segment_index(probe0));
        SegmentStatus status = combine_status(s1.status, s2.status);

        std::vector<Surd> pieces{p};
        for (Surd& x : detail::formula_crossings(s1.formula, s2.formula, p, q))
            pieces.push_back(std::move(x));
        pieces.push_back(q);

        for (std::size_t j = 0; j + 1 < pieces.size(); ++j) {
            Rational probe = rational_between(pieces[j], pieces[j + 1]);
            int cmp = formula_compare_at(s1.formula, s2.formula, Surd(probe));
            const SegmentFormula& winner = cmp >= 0 ? s1.formula : s2.formula;
            out.append(pieces[j + 1], winner, status);
        }
    }
    return out.normalized();
}

} // namespace capax
