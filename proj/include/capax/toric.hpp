#pragma once

#include <string>

#include "capax/value.hpp"

namespace capax {

enum class DomainKind { Ellipsoid, Polydisc };

inline const char* kind_name(DomainKind k) {
    return k == DomainKind::Ellipsoid ? "ellipsoid" : "polydisc";
}

// An ellipsoid E(x,y) or polydisc P(x,y) with positive rational area
// parameters, normalized so x <= y.
class ToricDomain {
public:
    static ToricDomain ellipsoid(Rational a, Rational b) {
        return ToricDomain(DomainKind::Ellipsoid, std::move(a), std::move(b));
    }
    static ToricDomain polydisc(Rational a, Rational b) {
        return ToricDomain(DomainKind::Polydisc, std::move(a), std::move(b));
    }
    static ToricDomain make(DomainKind k, Rational a, Rational b) {
        return ToricDomain(k, std::move(a), std::move(b));
    }

    DomainKind kind() const { return kind_; }
    const Rational& x() const { return x_; }
    const Rational& y() const { return y_; }

    // Aspect ratio y/x >= 1.
    Rational eccentricity() const { return y_ / x_; }

    ToricDomain scaled(const Rational& c) const {
        if (c.sign() <= 0) throw InvalidParameter("toric domain scale must be positive");
        return ToricDomain(kind_, x_ * c, y_ * c);
    }

    std::string str() const {
        return std::string(kind_ == DomainKind::Ellipsoid ? "E(" : "P(") + x_.str() + "," +
               y_.str() + ")";
    }

    friend bool operator==(const ToricDomain& a, const ToricDomain& b) {
        return a.kind_ == b.kind_ && a.x_ == b.x_ && a.y_ == b.y_;
    }

private:
    ToricDomain(DomainKind k, Rational a, Rational b) : kind_(k), x_(std::move(a)), y_(std::move(b)) {
        if (x_.sign() <= 0 || y_.sign() <= 0)
            throw InvalidParameter("toric domain parameters must be positive");
        if (y_ < x_) std::swap(x_, y_);
    }

    DomainKind kind_;
    Rational x_;
    Rational y_;
};

// One stabilized embedding question: does E(1,a) x C^N embed into
// lambda * target x C^N?  Construction rescales so the domain is E(1,a);
// the common factor does not change the optimal lambda.
class EmbeddingProblem {
public:
    EmbeddingProblem(const ToricDomain& domain, const ToricDomain& target, long stabilization)
        : target_(ToricDomain::ellipsoid(1, 1)), n_(stabilization) {
        if (domain.kind() != DomainKind::Ellipsoid)
            throw InvalidParameter("embedding domain must be an ellipsoid");
        if (n_ < 0) throw InvalidParameter("stabilization must be >= 0");
        a_ = domain.eccentricity();
        target_ = target.scaled(domain.x().reciprocal());
        if (target_.x() < Rational(1))
            throw InvalidParameter("target smaller than domain after normalization");
    }

    // Eccentricity of the normalized domain E(1,a), a >= 1.
    const Rational& a() const { return a_; }
    // Target after dividing out the domain scale; parameters >= 1.
    const ToricDomain& target() const { return target_; }
    // Aspect ratio b of the normalized target (1,b).
    Rational target_b() const { return target_.eccentricity(); }
    // Leftover scale s: bounds for the unit target (1,b) divide by s.
    const Rational& target_scale() const { return target_.x(); }
    long stabilization() const { return n_; }

    std::string str() const {
        return "E(1," + a_.str() + ") -> " + target_.str() + " [N=" + std::to_string(n_) + "]";
    }

    friend bool operator==(const EmbeddingProblem& p, const EmbeddingProblem& q) {
        return p.a_ == q.a_ && p.target_ == q.target_ && p.n_ == q.n_;
    }

private:
    Rational a_;
    ToricDomain target_;
    long n_;
};

} // namespace capax
