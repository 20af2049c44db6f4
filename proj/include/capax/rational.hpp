#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "capax/errors.hpp"

namespace capax {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

// Floor of the integer square root; exact for any nonnegative BigInt.
inline BigInt isqrt(const BigInt& n) {
    if (n < 0) throw InvalidParameter("isqrt of negative value");
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const BigInt& n, BigInt* root = nullptr) {
    if (n < 0) return false;
    BigInt s = boost::multiprecision::sqrt(n);
    if (s * s != n) return false;
    if (root) *root = s;
    return true;
}

// Exact fraction over arbitrary-precision integers.  Always stored in lowest
// terms with a positive denominator; every operation is exact.
//
// (boost::rational<cpp_int> rejects cpp_int denominators at construction in
// the Boost shipped here, so the normalization lives in this class.)
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    BigInt floor() const {
        if (num_ >= 0) return num_ / den_;
        return -((-num_ + den_ - 1) / den_);
    }
    BigInt ceil() const { return -(-*this).floor(); }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    Rational reciprocal() const {
        if (num_ == 0) throw InvalidParameter("reciprocal of zero");
        return Rational(den_, num_);
    }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw InvalidParameter("division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // Perfect rational square: both numerator and denominator are squares.
    bool is_perfect_square(Rational* root = nullptr) const {
        if (num_ < 0) return false;
        BigInt rn, rd;
        if (!capax::is_perfect_square(num_, &rn)) return false;
        if (!capax::is_perfect_square(den_, &rd)) return false;
        if (root) *root = Rational(rn, rd);
        return true;
    }

    Rational squared() const { return *this * *this; }

    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    double to_double() const {
        return num_.convert_to<double>() / den_.convert_to<double>();
    }

    // Exact conversion: every finite double is a dyadic rational.
    static Rational from_double_exact(double x);

    // Accepts "p", "-p", "p/q"; returns nullopt on malformed input.
    static std::optional<Rational> parse(std::string_view s);

private:
    void normalize() {
        if (den_ == 0) throw InvalidParameter("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = big_gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

inline Rational Rational::from_double_exact(double x) {
    if (x != x || x - x != 0.0) throw InvalidParameter("cannot convert non-finite double");
    Rational r(0);
    bool neg = x < 0;
    if (neg) x = -x;
    // Peel off the binary expansion; terminates because doubles have finite
    // mantissas.
    Rational scale(1);
    while (x != 0.0) {
        double ip;
        if (x >= 1.0) {
            ip = std::floor(x);
            r += scale * Rational(BigInt(static_cast<long long>(ip)));
            x -= ip;
            if (x == 0.0) break;
        }
        x *= 2;
        scale /= 2;
        if (x >= 1.0) {
            r += scale;
            x -= 1.0;
        }
    }
    return neg ? -r : r;
}

inline std::optional<Rational> Rational::parse(std::string_view s) {
    auto parse_int = [](std::string_view t) -> std::optional<BigInt> {
        if (t.empty()) return std::nullopt;
        std::size_t i = 0;
        if (t[0] == '-' || t[0] == '+') i = 1;
        if (i == t.size()) return std::nullopt;
        for (std::size_t j = i; j < t.size(); ++j)
            if (t[j] < '0' || t[j] > '9') return std::nullopt;
        return BigInt(std::string(t));
    };
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        auto n = parse_int(s);
        if (!n) return std::nullopt;
        return Rational(*n);
    }
    auto n = parse_int(s.substr(0, slash));
    auto d = parse_int(s.substr(slash + 1));
    if (!n || !d || *d == 0) return std::nullopt;
    return Rational(*n, *d);
}

inline Rational rational_pow(const Rational& base, long exp) {
    if (exp < 0) return rational_pow(base.reciprocal(), -exp);
    Rational r(1), b = base;
    while (exp > 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

} // namespace capax
