#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "capax/toric.hpp"

namespace capax::certify {

// One bar-complex generator index pair; (i, j) != (0, 0).
struct BetaLetter {
    long i = 0;
    long j = 0;
    friend bool operator==(const BetaLetter& a, const BetaLetter& b) {
        return a.i == b.i && a.j == b.j;
    }
    friend bool operator<(const BetaLetter& a, const BetaLetter& b) {
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    }
};

// Multiset of generator letters; canonical form is sorted with merged
// multiplicities so equal multisets compare equal regardless of input order.
class BetaWord {
public:
    BetaWord() = default;

    void add(BetaLetter l, long multiplicity = 1) {
        if (l.i < 0 || l.j < 0 || (l.i == 0 && l.j == 0))
            throw InvalidParameter("beta letter indices must be nonnegative and not both zero");
        if (multiplicity <= 0) throw InvalidParameter("letter multiplicity must be positive");
        for (auto& [letter, mult] : letters_) {
            if (letter == l) {
                mult += multiplicity;
                return;
            }
        }
        letters_.push_back({l, multiplicity});
        std::sort(letters_.begin(), letters_.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }

    bool empty() const { return letters_.empty(); }
    const std::vector<std::pair<BetaLetter, long>>& letters() const { return letters_; }

    // Total multiplicity (the word length k).
    long length() const {
        long k = 0;
        for (auto& [l, m] : letters_) k += m;
        return k;
    }

    BetaWord concatenated(const BetaWord& o) const {
        BetaWord out = *this;
        for (auto& [l, m] : o.letters_) out.add(l, m);
        return out;
    }

    std::string str() const {
        std::string s;
        for (auto& [l, m] : letters_) {
            if (!s.empty()) s += " ";
            s += "b(" + std::to_string(l.i) + "," + std::to_string(l.j) + ")";
            if (m > 1) s += "^" + std::to_string(m);
        }
        return s;
    }

    friend bool operator==(const BetaWord& a, const BetaWord& b) {
        return a.letters_ == b.letters_;
    }

private:
    std::vector<std::pair<BetaLetter, long>> letters_;
};

} // namespace capax::certify

namespace capax::bounds {

enum class Direction { Lower, Upper };

// Where a bound came from; lower bounds cite a capacity or volume argument,
// upper bounds cite a construction.
struct Provenance {
    enum class Kind {
        GkRatio,
        EhRatio,
        Volume,
        FoldEll,
        FoldEllSmallB,
        FoldB1,
        FoldPoly,
        Inclusion,
        Subscaling,
        TheoremFormula,
        Certificate,
        FourDim,
    };

    Kind kind;
    std::optional<long> index;                  // witness k or l
    std::optional<Rational> from;               // subscaling source parameter
    std::optional<std::string> theorem_id;      // theorem evaluator label
    std::optional<certify::BetaWord> word;      // certificate input cycle

    static Provenance gk_ratio(long k) { return {Kind::GkRatio, k, {}, {}, {}}; }
    static Provenance eh_ratio(long l) { return {Kind::EhRatio, l, {}, {}, {}}; }
    static Provenance volume() { return {Kind::Volume, {}, {}, {}, {}}; }
    static Provenance simple(Kind k) { return {k, {}, {}, {}, {}}; }
    static Provenance subscaling(Rational from) {
        return {Kind::Subscaling, {}, std::move(from), {}, {}};
    }
    static Provenance theorem(std::string id) {
        return {Kind::TheoremFormula, {}, {}, std::move(id), {}};
    }
    static Provenance certificate(certify::BetaWord w) {
        return {Kind::Certificate, {}, {}, {}, std::move(w)};
    }

    friend bool operator==(const Provenance& a, const Provenance& b) {
        return a.kind == b.kind && a.index == b.index && a.from == b.from &&
               a.theorem_id == b.theorem_id && a.word == b.word;
    }
};

inline const char* provenance_kind_name(Provenance::Kind k) {
    switch (k) {
        case Provenance::Kind::GkRatio: return "gk-ratio";
        case Provenance::Kind::EhRatio: return "eh-ratio";
        case Provenance::Kind::Volume: return "volume";
        case Provenance::Kind::FoldEll: return "fold-ell";
        case Provenance::Kind::FoldEllSmallB: return "fold-ell-small-b";
        case Provenance::Kind::FoldB1: return "fold-b1";
        case Provenance::Kind::FoldPoly: return "fold-poly";
        case Provenance::Kind::Inclusion: return "inclusion";
        case Provenance::Kind::Subscaling: return "subscaling";
        case Provenance::Kind::TheoremFormula: return "theorem";
        case Provenance::Kind::Certificate: return "certificate";
        default: return "fourdim";
    }
}

struct Bound {
    Value value;
    Direction direction;
    Provenance provenance;

    friend bool operator==(const Bound& a, const Bound& b) {
        return value_eq(a.value, b.value) && a.direction == b.direction &&
               a.provenance == b.provenance;
    }
};

// Exactly one of the two shapes: a pinned value (best lower equals best
// upper, bit for bit) or the surviving interval.
struct Verdict {
    bool determined = false;
    Value best_lower = Rational(0);
    Value best_upper = Rational(0);

    friend bool operator==(const Verdict& a, const Verdict& b) {
        return a.determined == b.determined && value_eq(a.best_lower, b.best_lower) &&
               value_eq(a.best_upper, b.best_upper);
    }
};

struct TheoremResult {
    Rational value;
    std::string theorem_id;
    std::vector<std::string> hypotheses;
};

struct BoundReport {
    EmbeddingProblem problem;
    std::vector<Bound> lowers;
    std::vector<Bound> uppers;
    Verdict verdict;
    std::optional<TheoremResult> theorem;
    std::vector<std::string> flags;
};

} // namespace capax::bounds
