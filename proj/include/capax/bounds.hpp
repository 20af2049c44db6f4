#pragma once

#include <optional>
#include <string>
#include <vector>

#include "capax/capacities.hpp"
#include "capax/certify.hpp"
#include "capax/fourdim.hpp"

namespace capax::bounds {

namespace detail {

// Bounds below are stated for a unit target (1,b); a residual target scale s
// divides the embedding factor.
inline Value descale(Value v, const Rational& s) {
    return value_scaled(std::move(v), s.reciprocal());
}

} // namespace detail

// Four-dimensional volume obstruction.  Only valid for unstabilized
// problems; reconcile gates it to N = 0 (the stabilized product has
// infinite volume).
inline Bound volume_lower(const EmbeddingProblem& p) {
    Rational b = p.target_b();
    Rational ratio = p.target().kind() == DomainKind::Ellipsoid ? p.a() / b
                                                                : p.a() / (Rational(2) * b);
    SqrtValue v = SqrtValue::sqrt_of(ratio);
    return Bound{detail::descale(make_value(v), p.target_scale()), Direction::Lower,
                 Provenance::volume()};
}

// Best capacity-ratio obstruction through index k_max; polydisc targets use
// odd indices only (the even values are unproven).  Valid for every N by
// scaling, monotonicity and stabilization of the capacity sequence.
inline Bound gk_lower(const EmbeddingProblem& p, long k_max) {
    if (k_max < 1) throw InvalidParameter("gk_lower requires k_max >= 1");
    Rational b = p.target_b();
    bool poly = p.target().kind() == DomainKind::Polydisc;
    std::optional<Rational> best;
    long best_k = 1;
    for (long k = 1; k <= k_max; ++k) {
        if (poly && k % 2 == 0) continue;
        Rational num = capacities::gk_ellipsoid(p.a(), k).value;
        Rational den = poly ? capacities::gk_polydisc(b, k).value
                            : capacities::gk_ellipsoid(b, k).value;
        Rational ratio = num / den;
        if (!best || ratio > *best) {
            best = ratio;
            best_k = k;
        }
    }
    return Bound{detail::descale(make_value(*best), p.target_scale()), Direction::Lower,
                 Provenance::gk_ratio(best_k)};
}

// Generic Ekeland-Hofer ratio bound; ellipsoid targets only.
inline Bound eh_lower(const EmbeddingProblem& p, long l_max) {
    if (p.target().kind() != DomainKind::Ellipsoid)
        throw PolydiscTargetUnsupported("eh_lower applies to ellipsoid targets only");
    if (l_max < 1) throw InvalidParameter("eh_lower requires l_max >= 1");
    auto dom = capacities::eh_prefix(Rational(1), p.a(), static_cast<std::size_t>(l_max));
    auto tgt = capacities::eh_prefix(Rational(1), p.target_b(), static_cast<std::size_t>(l_max));
    std::optional<Rational> best;
    long best_l = 1;
    for (long l = 1; l <= l_max; ++l) {
        Rational ratio = dom[l - 1] / tgt[l - 1];
        if (!best || ratio > *best) {
            best = ratio;
            best_l = l;
        }
    }
    return Bound{detail::descale(make_value(*best), p.target_scale()), Direction::Lower,
                 Provenance::eh_ratio(best_l)};
}

// Folding constructions.  All of them are stabilized statements, so they
// require N >= 1; bounds whose hypotheses fail are omitted.
inline std::vector<Bound> fold_upper(const EmbeddingProblem& p) {
    std::vector<Bound> out;
    if (p.stabilization() < 1) return out;
    const Rational& a = p.a();
    Rational b = p.target_b();
    const Rational& s = p.target_scale();
    auto push = [&](Rational v, Provenance::Kind kind) {
        out.push_back(Bound{detail::descale(make_value(std::move(v)), s), Direction::Upper,
                            Provenance::simple(kind)});
    };
    if (p.target().kind() == DomainKind::Ellipsoid) {
        Rational two_a = Rational(2) * a;
        std::optional<Rational> ell;      // 2a/(a+b-1), b >= 2, a >= b-1
        std::optional<Rational> small_b;  // a(b+2)/((a+1)b), 1 <= b <= 2
        if (b >= Rational(2) && a >= b - Rational(1)) ell = two_a / (a + b - Rational(1));
        if (b >= Rational(1) && b <= Rational(2)) small_b = a * (b + Rational(2)) / ((a + Rational(1)) * b);
        if (ell && small_b && *ell != *small_b)
            throw InconsistentBounds("overlapping folding formulas disagree at b = " + b.str());
        if (ell) push(*ell, Provenance::Kind::FoldEll);
        if (small_b) push(*small_b, b == Rational(1) ? Provenance::Kind::FoldB1
                                                     : Provenance::Kind::FoldEllSmallB);
    } else {
        // 2a/(a+2b-1); below a = 2b-1 the expression dips under the
        // nonsqueezing floor, so the construction needs a >= 2b-1.
        if (b >= Rational(1) && a >= Rational(2) * b - Rational(1))
            push(Rational(2) * a / (a + Rational(2) * b - Rational(1)), Provenance::Kind::FoldPoly);
    }
    return out;
}

// Plain inclusion E(1,a) into the target, optimal exactly when it gives
// factor one (nonsqueezing); otherwise absent.
inline std::optional<Bound> inclusion_upper(const EmbeddingProblem& p) {
    if (p.a() <= p.target_b()) {
        return Bound{detail::descale(make_value(Rational(1)), p.target_scale()), Direction::Upper,
                     Provenance::simple(Provenance::Kind::Inclusion)};
    }
    return std::nullopt;
}

// Transport of a known upper bound c0 at a0 to any a >= a0 along lines
// through the origin.
inline Bound subscaling_upper(const Rational& a0, const Rational& c0, const Rational& a) {
    if (a < a0) throw InvalidParameter("subscaling needs a >= a0");
    return Bound{make_value(a / a0 * c0), Direction::Upper, Provenance::subscaling(a0)};
}

// Whitelist of hypothesis-gated exact formulas for stabilized problems
// (N >= 1).  Returns the asserted value with its hypothesis trail when some
// formula applies; never interpolates.  Overlapping formulas must agree.
inline std::optional<TheoremResult> theorem_value(const EmbeddingProblem& p) {
    if (p.stabilization() < 1) return std::nullopt;
    const Rational& a = p.a();
    Rational b = p.target_b();
    std::vector<TheoremResult> hits;

    if (p.target().kind() == DomainKind::Ellipsoid) {
        if (b.is_integer() && b > Rational(1) && a.is_integer() && a >= b + Rational(1) &&
            (a.num() - b.num()) % 2 != 0) {
            hits.push_back({Rational(2) * a / (a + b - Rational(1)),
                            "ell-integer-opposite-parity",
                            {"b integer > 1", "a integer >= b+1", "a, b of opposite parity"}});
        }
        if (b == Rational(1) && a.is_integer() && a.num() % 3 == 2) {
            hits.push_back({Rational(3) * a / (a + Rational(1)),
                            "ball-two-mod-three",
                            {"b = 1", "a integer with a = 2 (mod 3)"}});
        }
        if (b == Rational(2) && a.is_integer() && a.num() % 2 == 0 && a >= Rational(6) &&
            a <= Rational(100)) {
            hits.push_back({Rational(2) * a / (a + Rational(1)),
                            "ell-b2-even-verified",
                            {"b = 2", "a even in [6, 100]"}});
        }
        if (a <= b) {
            hits.push_back({Rational(1), "first-step-ell-flat", {"1 <= a <= b"}});
        } else if (a <= b + Rational(1)) {
            hits.push_back({a / b, "first-step-ell-slope", {"b <= a <= b+1"}});
        }
    } else {
        // Smallest odd integer a0 >= 2b-1.
        BigInt a0i = (Rational(2) * b - Rational(1)).ceil();
        if (a0i % 2 == 0) a0i += 1;
        Rational a0(a0i);
        if (a.is_integer() && a.num() % 2 != 0 && a >= Rational(2) * b - Rational(1)) {
            hits.push_back({Rational(2) * a / (a + Rational(2) * b - Rational(1)),
                            "poly-odd",
                            {"a odd integer >= 2b-1"}});
        }
        if (b == Rational(1) && a.is_integer() && a.num() % 2 == 0 && a >= Rational(6) &&
            a <= Rational(100)) {
            hits.push_back({Rational(2) * a / (a + Rational(1)),
                            "poly-b1-even-verified",
                            {"b = 1", "a even in [6, 100]"}});
        }
        if (a <= (a0 - Rational(1)) / Rational(2) + b) {
            hits.push_back({Rational(1), "first-step-poly-flat", {"1 <= a <= (a0-1)/2 + b"}});
        } else if (a <= a0) {
            hits.push_back({Rational(2) * a / (a0 + Rational(2) * b - Rational(1)),
                            "first-step-poly-slope",
                            {"(a0-1)/2 + b <= a <= a0"}});
        }
    }

    if (hits.empty()) return std::nullopt;
    for (std::size_t i = 1; i < hits.size(); ++i)
        if (hits[i].value != hits[0].value)
            throw ConflictingTheorems("formulas " + hits[0].theorem_id + " and " +
                                      hits[i].theorem_id + " disagree on " + p.str());
    // Report the theorem value for the problem's actual target scale.
    TheoremResult r = hits.front();
    r.value = r.value / p.target_scale();
    return r;
}

struct ReconcileDepth {
    long k_max = 0;               // 0: default 4*ceil(a)
    long l_max = 0;               // 0: default 8*ceil(a)
    bool use_fourdim = false;     // include certified unstabilized values
    long fourdim_depth = 50000;
    std::vector<certify::Certificate> certificates;
};

namespace detail {

// Certified unstabilized value for the normalized unit target, when the
// dominance truncation closes; polydisc targets route through the integer-b
// equivalence.  Valid as an upper bound for every N (product with the
// identity), and as the exact answer when N = 0.
inline std::optional<Value> fourdim_exact_value(const EmbeddingProblem& p, long depth) {
    std::optional<fourdim::C0Result> r;
    if (p.target().kind() == DomainKind::Ellipsoid) {
        r = fourdim::c0_ell(p.a(), p.target_b(), depth);
    } else if (p.target_b().is_integer()) {
        r = fourdim::c0_poly(p.a(), p.target_b(), depth);
    }
    if (r && r->status == SegmentStatus::Exact) return r->value;
    return std::nullopt;
}

} // namespace detail

// Collect every hypothesis-gated bound and compare the best of each side.
// A determined verdict means the best lower and best upper agree exactly.
inline BoundReport reconcile(const EmbeddingProblem& p, const ReconcileDepth& depth = {}) {
    BoundReport report{p, {}, {}, {}, {}, {}};
    long ceil_a = p.a().ceil().convert_to<long>();
    long k_max = depth.k_max > 0 ? depth.k_max : 4 * ceil_a;
    long l_max = depth.l_max > 0 ? depth.l_max : 8 * ceil_a;

    if (p.stabilization() == 0) report.lowers.push_back(volume_lower(p));
    report.lowers.push_back(gk_lower(p, k_max));
    if (p.target().kind() == DomainKind::Ellipsoid) report.lowers.push_back(eh_lower(p, l_max));
    for (const auto& cert : depth.certificates) {
        if (cert.domain_a != p.a() || !(cert.target == p.target())) {
            report.flags.push_back("certificate for " + cert.target.str() + " at a = " +
                                   cert.domain_a.str() + " does not match the problem; skipped");
            continue;
        }
        report.lowers.push_back(certify::certificate_bound(cert));
    }

    for (auto& b : fold_upper(p)) report.uppers.push_back(std::move(b));
    if (auto inc = inclusion_upper(p)) report.uppers.push_back(std::move(*inc));
    if (p.a() > p.target_b()) {
        // Inclusion holds at a0 = b with factor one; subscaling transports
        // it to a/b for any a and any N.  Usually beaten by folding, but it
        // is the exact first-step value on [b, b+1] and it guarantees every
        // problem has at least one upper bound.
        Bound sub = subscaling_upper(p.target_b(), Rational(1), p.a());
        sub.value = detail::descale(sub.value, p.target_scale());
        report.uppers.push_back(std::move(sub));
    }
    if (p.stabilization() >= 1) {
        // Transport the nearest smaller theorem point along subscaling.
        // Only the generic odd/opposite-parity families are useful here.
        std::optional<std::pair<Rational, Rational>> src; // (a0, value at a0 for unit target)
        Rational b = p.target_b();
        if (p.target().kind() == DomainKind::Ellipsoid && b.is_integer() && b > Rational(1)) {
            BigInt a0 = p.a().floor();
            if ((a0 - b.num()) % 2 == 0) a0 -= 1; // want parity opposite b
            if (Rational(a0) >= b + Rational(1) && Rational(a0) < p.a())
                src = {Rational(a0), Rational(2 * a0) / (Rational(a0) + b - Rational(1))};
        } else if (p.target().kind() == DomainKind::Polydisc) {
            BigInt a0 = p.a().floor();
            if (a0 % 2 == 0) a0 -= 1;
            if (Rational(a0) >= Rational(2) * b - Rational(1) && Rational(a0) < p.a())
                src = {Rational(a0), Rational(2 * a0) / (Rational(a0) + Rational(2) * b - Rational(1))};
        }
        if (src) {
            Bound sub = subscaling_upper(src->first, src->second, p.a());
            sub.value = detail::descale(sub.value, p.target_scale());
            report.uppers.push_back(std::move(sub));
        }
    }
    if (depth.use_fourdim) {
        if (auto v = detail::fourdim_exact_value(p, depth.fourdim_depth)) {
            Value scaled = detail::descale(*v, p.target_scale());
            report.uppers.push_back(Bound{scaled, Direction::Upper,
                                          Provenance::simple(Provenance::Kind::FourDim)});
            // For the unstabilized problem this is the value itself.
            if (p.stabilization() == 0)
                report.lowers.push_back(Bound{scaled, Direction::Lower,
                                              Provenance::simple(Provenance::Kind::FourDim)});
        }
    }

    report.theorem = theorem_value(p);

    if (report.lowers.empty() || report.uppers.empty())
        throw InvalidParameter("no applicable bounds for " + p.str());
    Value best_lower = report.lowers.front().value;
    for (const auto& b : report.lowers) best_lower = value_max(best_lower, b.value);
    Value best_upper = report.uppers.front().value;
    for (const auto& b : report.uppers) best_upper = value_min(best_upper, b.value);

    for (const auto& lo : report.lowers)
        for (const auto& up : report.uppers)
            if (value_compare(lo.value, up.value) > 0)
                throw InconsistentBounds(
                    "lower bound " + value_str(lo.value) + " (" +
                    provenance_kind_name(lo.provenance.kind) + ") exceeds upper bound " +
                    value_str(up.value) + " (" + provenance_kind_name(up.provenance.kind) +
                    ") on " + p.str());

    report.verdict.best_lower = best_lower;
    report.verdict.best_upper = best_upper;
    report.verdict.determined = value_eq(best_lower, best_upper);

    if (report.theorem) {
        Value tv = make_value(report.theorem->value);
        if (value_compare(tv, best_upper) > 0 || value_compare(tv, best_lower) < 0)
            throw InconsistentBounds("theorem value " + report.theorem->value.str() +
                                     " (" + report.theorem->theorem_id +
                                     ") falls outside the computed bounds on " + p.str());
        if (value_compare(make_value(report.theorem->value), best_lower) > 0)
            report.flags.push_back("computed lower bounds fall short of theorem value (" +
                                   report.theorem->theorem_id + ")");
    }
    return report;
}

// Best lower-bound witness: the provenance of a bound attaining best_lower.
inline const Bound* best_lower_bound(const BoundReport& r) {
    const Bound* best = nullptr;
    for (const auto& b : r.lowers)
        if (value_eq(b.value, r.verdict.best_lower)) {
            best = &b;
            break;
        }
    return best;
}

inline const Bound* best_upper_bound(const BoundReport& r) {
    const Bound* best = nullptr;
    for (const auto& b : r.uppers)
        if (value_eq(b.value, r.verdict.best_upper)) {
            best = &b;
            break;
        }
    return best;
}

} // namespace capax::bounds
