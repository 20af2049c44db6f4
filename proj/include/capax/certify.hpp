#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "capax/bound_types.hpp"
#include "capax/capacities.hpp"

namespace capax::certify {

// Filtration level of a word for a unit-scale target: polydisc targets
// weight a letter by x*i + y*j, ellipsoid targets by max(x*i, y*j); sum over
// the multiset.
inline Rational action(const BetaWord& word, const ToricDomain& target) {
    Rational total(0);
    for (const auto& [l, mult] : word.letters()) {
        Rational xi = target.x() * Rational(l.i);
        Rational yj = target.y() * Rational(l.j);
        Rational letter = target.kind() == DomainKind::Polydisc ? xi + yj : max(xi, yj);
        total += letter * Rational(mult);
    }
    return total;
}

// Output index of the word: sum of all letter indices plus (length - 1).
inline long eh_index(const BetaWord& word) {
    if (word.empty()) throw InvalidParameter("eh_index of an empty word");
    long sum = 0;
    for (const auto& [l, mult] : word.letters()) sum += (l.i + l.j) * mult;
    return sum + word.length() - 1;
}

// An obstruction certificate: the input cycle, the problem it applies to,
// and the externally-established nonvanishing assumption it relies on.  The
// engine never asserts nonvanishing itself, so the citation is mandatory.
struct Certificate {
    BetaWord word;
    Rational domain_a = Rational(1);
    ToricDomain target = ToricDomain::ellipsoid(1, 1);
    bool assumed_nonvanishing = false;
    std::string citation;

    friend bool operator==(const Certificate& a, const Certificate& b) {
        return a.word == b.word && a.domain_a == b.domain_a && a.target == b.target &&
               a.assumed_nonvanishing == b.assumed_nonvanishing && a.citation == b.citation;
    }
};

// Lower bound implied by a certificate: the embedding factor must clear the
// domain capacity at the word's output index divided by the word's action in
// the target filtration.
inline bounds::Bound certificate_bound(const Certificate& c) {
    if (!c.assumed_nonvanishing || c.citation.empty())
        throw UncitedAssumption("certificate requires an assumed-nonvanishing citation");
    long l = eh_index(c.word);
    Rational cap = capacities::eh_ellipsoid(Rational(1), c.domain_a, l);
    Rational act = action(c.word, c.target);
    if (act.sign() <= 0) throw InvalidParameter("certificate word has nonpositive action");
    return bounds::Bound{make_value(cap / act), bounds::Direction::Lower,
                         bounds::Provenance::certificate(c.word)};
}

enum class FamilyKind { PolyTarget, EllTarget };

// The two verified certificate families for even 6 <= a <= 100: a cube
// (b=1 polydisc) target with word b(1,0)^3 b(0,1)^(a-2), and an E(1,2)
// target with word b(2,1)^3 b(1,0)^(a-5).  Outside the verified range the
// construction refuses rather than extrapolating.
inline Certificate family_certificate(long a, FamilyKind kind) {
    if (a < 6 || a > 100 || a % 2 != 0)
        throw OutOfVerifiedRange("certificate families are verified for even a in [6,100] only");
    Certificate c;
    c.domain_a = Rational(a);
    c.assumed_nonvanishing = true;
    c.citation = "structure-coefficient nonvanishing verified by computer calculation";
    if (kind == FamilyKind::PolyTarget) {
        c.target = ToricDomain::polydisc(Rational(1), Rational(1));
        c.word.add({1, 0}, 3);
        c.word.add({0, 1}, a - 2);
    } else {
        c.target = ToricDomain::ellipsoid(Rational(1), Rational(2));
        c.word.add({2, 1}, 3);
        c.word.add({1, 0}, a - 5);
    }
    return c;
}

// JSON document form:
//   {"domain_a": "p/q",
//    "target": {"kind": "ellipsoid"|"polydisc", "x": "p/q", "y": "p/q"},
//    "word": [[i, j, multiplicity], ...],
//    "citation": "..."}
inline Certificate certificate_from_json(const nlohmann::json& j) {
    auto rational_field = [](const nlohmann::json& v, const char* what) {
        if (!v.is_string()) throw InvalidParameter(std::string("certificate ") + what +
                                                   " must be a \"p/q\" string");
        auto r = Rational::parse(v.get<std::string>());
        if (!r) throw InvalidParameter(std::string("malformed rational in certificate ") + what);
        return *r;
    };
    if (!j.contains("citation") || !j["citation"].is_string() ||
        j["citation"].get<std::string>().empty())
        throw UncitedAssumption("certificate document is missing its citation");
    if (!j.contains("domain_a") || !j.contains("target") || !j.contains("word"))
        throw InvalidParameter("certificate document is missing a required field");

    Certificate c;
    c.domain_a = rational_field(j["domain_a"], "domain_a");
    const auto& t = j["target"];
    std::string kind = t.value("kind", "");
    if (kind != "ellipsoid" && kind != "polydisc")
        throw InvalidParameter("certificate target kind must be ellipsoid or polydisc");
    Rational x = rational_field(t["x"], "target.x");
    Rational y = rational_field(t["y"], "target.y");
    c.target = ToricDomain::make(kind == "ellipsoid" ? DomainKind::Ellipsoid : DomainKind::Polydisc,
                                 x, y);
    if (!j["word"].is_array() || j["word"].empty())
        throw InvalidParameter("certificate word must be a nonempty array");
    for (const auto& entry : j["word"]) {
        if (!entry.is_array() || entry.size() != 3)
            throw InvalidParameter("certificate word entries are [i, j, multiplicity]");
        c.word.add({entry[0].get<long>(), entry[1].get<long>()}, entry[2].get<long>());
    }
    c.assumed_nonvanishing = true;
    c.citation = j["citation"].get<std::string>();
    return c;
}

inline nlohmann::json certificate_to_json(const Certificate& c) {
    nlohmann::json j;
    j["domain_a"] = c.domain_a.str();
    j["target"] = {{"kind", kind_name(c.target.kind())},
                   {"x", c.target.x().str()},
                   {"y", c.target.y().str()}};
    nlohmann::json word = nlohmann::json::array();
    for (const auto& [l, m] : c.word.letters()) word.push_back({l.i, l.j, m});
    j["word"] = word;
    j["citation"] = c.citation;
    return j;
}

} // namespace capax::certify
