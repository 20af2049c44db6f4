#pragma once

#include <string>

#include "capax/rational.hpp"

namespace capax {

// Exact sign of A + B*sqrt(p) with p >= 0, decided by sign-aware squaring.
inline int sign_with_sqrt(const Rational& a, const Rational& b, const Rational& p) {
    if (p.sign() < 0) throw InvalidParameter("negative radicand");
    if (b.is_zero() || p.is_zero()) return a.sign();
    if (a.is_zero()) return b.sign();
    int sa = a.sign(), sb = b.sign();
    if (sa == sb) return sa;
    // Opposite signs: |a| vs |b|*sqrt(p) reduces to a^2 vs b^2*p.
    Rational a2 = a.squared();
    Rational b2p = b.squared() * p;
    if (a2 == b2p) return 0;
    return (a2 > b2p) ? sa : sb;
}

// Exact sign of A + B*sqrt(p) + C*sqrt(q) with p, q >= 0.  At most two
// squarings are needed; every branch stays in rational arithmetic.
inline int sign_with_two_sqrts(const Rational& a,
                               const Rational& b, const Rational& p,
                               const Rational& c, const Rational& q) {
    if (b.is_zero() || p.is_zero()) return sign_with_sqrt(a, c, q);
    if (c.is_zero() || q.is_zero()) return sign_with_sqrt(a, b, p);
    if (p == q) return sign_with_sqrt(a, b + c, p);

    // Sign of T = B*sqrt(p) + C*sqrt(q).
    int st;
    int sb = b.sign(), sc = c.sign();
    if (sb == sc) {
        st = sb;
    } else {
        Rational b2p = b.squared() * p;
        Rational c2q = c.squared() * q;
        st = (b2p == c2q) ? 0 : ((b2p > c2q) ? sb : sc);
    }
    if (st == 0) return a.sign();
    if (a.is_zero()) return st;
    int sa = a.sign();
    if (sa == st) return sa;
    // Opposite signs: compare a^2 with T^2 = b^2 p + c^2 q + 2bc*sqrt(pq).
    Rational lhs = a.squared() - b.squared() * p - c.squared() * q;
    int cmp = sign_with_sqrt(lhs, Rational(-2) * b * c, p * q);
    if (cmp == 0) return 0;
    return (cmp > 0) ? sa : st;
}

// Exact value of the form u + v*sqrt(d), d >= 0.  Closed under addition and
// multiplication when radicands match, and under squaring; comparisons with
// arbitrary radicands are exact.  Covers every breakpoint and crossing value
// this library needs (roots of rational quadratics).
class Surd {
public:
    Surd() : rat_(0), coef_(0), rad_(1) {}
    Surd(Rational r) : rat_(std::move(r)), coef_(0), rad_(1) {}
    Surd(long long r) : Surd(Rational(r)) {}
    Surd(Rational rational_part, Rational sqrt_coef, Rational radicand)
        : rat_(std::move(rational_part)), coef_(std::move(sqrt_coef)), rad_(std::move(radicand)) {
        normalize();
    }

    static Surd sqrt_of(const Rational& d) { return Surd(Rational(0), Rational(1), d); }

    const Rational& rational_part() const { return rat_; }
    const Rational& sqrt_coef() const { return coef_; }
    const Rational& radicand() const { return rad_; }

    bool is_rational() const { return coef_.is_zero(); }
    const Rational& as_rational() const {
        if (!is_rational()) throw InvalidParameter("surd is irrational");
        return rat_;
    }

    int sign() const { return sign_with_sqrt(rat_, coef_, rad_); }

    // Trichotomy against another surd, radicands need not match.
    int compare(const Surd& o) const {
        return sign_with_two_sqrts(rat_ - o.rat_, coef_, rad_, -o.coef_, o.rad_);
    }

    Surd operator-() const { return Surd(-rat_, -coef_, rad_, no_normalize{}); }

    Surd operator+(const Rational& r) const { return Surd(rat_ + r, coef_, rad_, no_normalize{}); }
    Surd operator-(const Rational& r) const { return Surd(rat_ - r, coef_, rad_, no_normalize{}); }

    Surd operator+(const Surd& o) const {
        if (is_rational()) return o + rat_;
        if (o.is_rational()) return *this + o.rat_;
        if (rad_ != o.rad_) throw InvalidParameter("surd addition with mismatched radicands");
        return Surd(rat_ + o.rat_, coef_ + o.coef_, rad_);
    }
    Surd operator-(const Surd& o) const { return *this + (-o); }

    Surd scaled(const Rational& r) const {
        if (r.is_zero()) return Surd(Rational(0));
        return Surd(rat_ * r, coef_ * r, rad_, no_normalize{});
    }

    Surd operator*(const Surd& o) const {
        if (is_rational()) return o.scaled(rat_);
        if (o.is_rational()) return scaled(o.rat_);
        if (rad_ != o.rad_) throw InvalidParameter("surd product with mismatched radicands");
        return Surd(rat_ * o.rat_ + coef_ * o.coef_ * rad_,
                    rat_ * o.coef_ + coef_ * o.rat_, rad_);
    }

    Surd squared() const { return *this * *this; }

    Surd abs() const { return sign() < 0 ? -*this : *this; }

    double to_double() const {
        return rat_.to_double() + coef_.to_double() * std::sqrt(rad_.to_double());
    }

    std::string str() const {
        if (is_rational()) return rat_.str();
        std::string s;
        if (!rat_.is_zero()) s = rat_.str() + (coef_.sign() < 0 ? "" : "+");
        s += coef_.str() + "*sqrt(" + rad_.str() + ")";
        return s;
    }

    friend bool operator==(const Surd& a, const Surd& b) { return a.compare(b) == 0; }
    friend bool operator!=(const Surd& a, const Surd& b) { return a.compare(b) != 0; }
    friend bool operator<(const Surd& a, const Surd& b) { return a.compare(b) < 0; }
    friend bool operator>(const Surd& a, const Surd& b) { return a.compare(b) > 0; }
    friend bool operator<=(const Surd& a, const Surd& b) { return a.compare(b) <= 0; }
    friend bool operator>=(const Surd& a, const Surd& b) { return a.compare(b) >= 0; }

private:
    struct no_normalize {};
    Surd(Rational u, Rational v, Rational d, no_normalize)
        : rat_(std::move(u)), coef_(std::move(v)), rad_(std::move(d)) {}

    void normalize() {
        if (rad_.sign() < 0) throw InvalidParameter("negative radicand");
        if (coef_.is_zero() || rad_.is_zero()) {
            coef_ = Rational(0);
            rad_ = Rational(1);
            return;
        }
        Rational root;
        if (rad_.is_perfect_square(&root)) {
            rat_ += coef_ * root;
            coef_ = Rational(0);
            rad_ = Rational(1);
        }
    }

    Rational rat_;
    Rational coef_;
    Rational rad_;
};

// Exact sign of A + c*sqrt(P) where A and P are themselves surds (P >= 0).
// Used when comparing segment formulas at an irrational breakpoint, where
// the quantity under the square root is x + shift with x a surd.
inline int sign_surd_plus_sqrt(const Surd& a, const Rational& c, const Surd& p) {
    int sp = p.sign();
    if (sp < 0) throw InvalidParameter("negative radicand");
    if (c.is_zero() || sp == 0) return a.sign();
    int sa = a.sign();
    int sc = c.sign();
    if (sa == 0) return sc;
    if (sa == sc) return sa;
    int cmp = a.squared().compare(p.scaled(c.squared()));
    if (cmp == 0) return 0;
    return cmp > 0 ? sa : sc;
}

// Exact sign of A + b*sqrt(P) + c*sqrt(Q) with surd A, P, Q.  Requires the
// final combination step to stay within one radicand family (true whenever
// P and Q share the same surd radicand or are rational), which covers all
// callers here.
inline int sign_surd_plus_two_sqrts(const Surd& a,
                                    const Rational& b, const Surd& p,
                                    const Rational& c, const Surd& q) {
    if (b.is_zero() || p.sign() == 0) return sign_surd_plus_sqrt(a, c, q);
    if (c.is_zero() || q.sign() == 0) return sign_surd_plus_sqrt(a, b, p);
    if (p.compare(q) == 0) return sign_surd_plus_sqrt(a, b + c, p);

    int st;
    int sb = b.sign(), sc = c.sign();
    if (sb == sc) {
        st = sb;
    } else {
        int cmp = p.scaled(b.squared()).compare(q.scaled(c.squared()));
        st = (cmp == 0) ? 0 : (cmp > 0 ? sb : sc);
    }
    if (st == 0) return a.sign();
    int sa = a.sign();
    if (sa == 0) return st;
    if (sa == st) return sa;
    Surd s = a.squared() - p.scaled(b.squared()) - q.scaled(c.squared());
    int cmp2 = sign_surd_plus_sqrt(s, Rational(-2) * b * c, p * q);
    if (cmp2 == 0) return 0;
    return cmp2 > 0 ? sa : st;
}

// A rational strictly between two exact values.  Brackets each sqrt by
// dyadic rationals of increasing precision until the brackets separate.
inline Rational rational_between(const Surd& lo, const Surd& hi) {
    if (lo.compare(hi) >= 0) throw InvalidParameter("rational_between needs lo < hi");
    if (lo.is_rational() && hi.is_rational())
        return (lo.as_rational() + hi.as_rational()) / 2;

    auto bracket = [](const Surd& x, const BigInt& scale) {
        // Returns rationals [l, h] with l <= x <= h and h - l <= 2/scale.
        if (x.is_rational()) return std::pair<Rational, Rational>{x.as_rational(), x.as_rational()};
        const Rational& d = x.radicand();
        // floor(scale * sqrt(d)) via integer sqrt of d.num*scale^2/d.den.
        BigInt t = isqrt(d.num() * scale * scale / d.den());
        Rational root_lo(t, scale), root_hi(t + 2, scale);
        Rational c = x.sqrt_coef();
        Rational a = x.rational_part() + c * (c.sign() >= 0 ? root_lo : root_hi);
        Rational b = x.rational_part() + c * (c.sign() >= 0 ? root_hi : root_lo);
        return std::pair<Rational, Rational>{a, b};
    };

    for (BigInt scale(16);; scale *= scale) {
        auto [l1, h1] = bracket(lo, scale);
        auto [l2, h2] = bracket(hi, scale);
        if (h1 < l2) return (h1 + l2) / 2;
    }
}

} // namespace capax
