#pragma once

#include <string>
#include <variant>

#include "capax/surd.hpp"

namespace capax {

// coefficient * sqrt(radicand) with coefficient, radicand >= 0.  A radicand
// that is a perfect rational square folds into the coefficient, so such a
// value reports is_rational().  Comparisons are exact, decided by squaring.
class SqrtValue {
public:
    SqrtValue() : coef_(0), rad_(1) {}
    SqrtValue(Rational coefficient, Rational radicand)
        : coef_(std::move(coefficient)), rad_(std::move(radicand)) {
        if (coef_.sign() < 0) throw InvalidParameter("sqrt value with negative coefficient");
        if (rad_.sign() < 0) throw InvalidParameter("sqrt value with negative radicand");
        normalize();
    }

    static SqrtValue sqrt_of(const Rational& r) { return SqrtValue(Rational(1), r); }

    const Rational& coefficient() const { return coef_; }
    const Rational& radicand() const { return rad_; }

    bool is_rational() const { return rad_ == Rational(1) || coef_.is_zero(); }
    Rational as_rational() const {
        if (!is_rational()) throw InvalidParameter("sqrt value is irrational");
        return coef_;
    }

    // coefficient^2 * radicand; comparing squares is valid because values
    // are nonnegative.
    Rational square() const { return coef_.squared() * rad_; }

    Surd to_surd() const { return Surd(Rational(0), coef_, rad_); }

    int compare(const SqrtValue& o) const {
        Rational s = square(), t = o.square();
        return s == t ? 0 : (s < t ? -1 : 1);
    }
    int compare(const Rational& r) const {
        if (r.sign() < 0) return 1;
        Rational s = square(), t = r.squared();
        return s == t ? 0 : (s < t ? -1 : 1);
    }

    SqrtValue scaled(const Rational& c) const {
        if (c.sign() < 0) throw InvalidParameter("scaling sqrt value by negative factor");
        return SqrtValue(coef_ * c, rad_);
    }

    double to_double() const { return coef_.to_double() * std::sqrt(rad_.to_double()); }

    std::string str() const {
        if (is_rational()) return as_rational().str();
        return coef_.str() + "*sqrt(" + rad_.str() + ")";
    }

    friend bool operator==(const SqrtValue& a, const SqrtValue& b) { return a.compare(b) == 0; }
    friend bool operator<(const SqrtValue& a, const SqrtValue& b) { return a.compare(b) < 0; }

private:
    void normalize() {
        if (coef_.is_zero() || rad_.is_zero()) {
            coef_ = Rational(0);
            rad_ = Rational(1);
            return;
        }
        Rational root;
        if (rad_.is_perfect_square(&root)) {
            coef_ *= root;
            rad_ = Rational(1);
        }
    }

    Rational coef_;
    Rational rad_;
};

// Exact ordering shared by every comparison entry point; never touches
// floating point.
inline int sqrt_compare(const SqrtValue& u, const SqrtValue& v) { return u.compare(v); }
inline int sqrt_compare(const SqrtValue& u, const Rational& v) { return u.compare(v); }
inline int sqrt_compare(const Rational& u, const SqrtValue& v) { return -v.compare(u); }

// The numeric currency for bounds and curve values: an exact rational or an
// exact coefficient*sqrt(radicand).  Construction collapses rational
// SqrtValues into the Rational alternative so equality is structural.
using Value = std::variant<Rational, SqrtValue>;

inline Value make_value(Rational r) { return Value(std::move(r)); }
inline Value make_value(const SqrtValue& s) {
    if (s.is_rational()) return Value(s.as_rational());
    return Value(s);
}

inline Surd value_to_surd(const Value& v) {
    if (std::holds_alternative<Rational>(v)) return Surd(std::get<Rational>(v));
    return std::get<SqrtValue>(v).to_surd();
}

inline int value_compare(const Value& a, const Value& b) {
    return value_to_surd(a).compare(value_to_surd(b));
}

inline bool value_eq(const Value& a, const Value& b) { return value_compare(a, b) == 0; }
inline bool value_lt(const Value& a, const Value& b) { return value_compare(a, b) < 0; }

inline Value value_min(const Value& a, const Value& b) { return value_compare(a, b) <= 0 ? a : b; }
inline Value value_max(const Value& a, const Value& b) { return value_compare(a, b) >= 0 ? a : b; }

inline Value value_scaled(const Value& v, const Rational& c) {
    if (std::holds_alternative<Rational>(v)) return make_value(std::get<Rational>(v) * c);
    return make_value(std::get<SqrtValue>(v).scaled(c));
}

inline double value_to_double(const Value& v) {
    return std::holds_alternative<Rational>(v) ? std::get<Rational>(v).to_double()
                                               : std::get<SqrtValue>(v).to_double();
}

inline std::string value_str(const Value& v) {
    return std::holds_alternative<Rational>(v) ? std::get<Rational>(v).str()
                                               : std::get<SqrtValue>(v).str();
}

} // namespace capax
