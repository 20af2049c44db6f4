#pragma once

#include <stdexcept>
#include <string>

namespace capax {

// Base class for every error the library raises on bad input or broken
// internal invariants.  Callers that only care about "something went wrong"
// can catch this; the CLI maps subclasses to exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidParameter : Error {
    using Error::Error;
};

struct OutOfDomain : Error {
    using Error::Error;
};

struct DisjointDomains : Error {
    using Error::Error;
};

struct EvenIndexNotProven : Error {
    using Error::Error;
};

struct PolydiscTargetUnsupported : Error {
    using Error::Error;
};

struct DomainTooSmall : Error {
    using Error::Error;
};

struct NonIntegerB : Error {
    using Error::Error;
};

struct UncitedAssumption : Error {
    using Error::Error;
};

struct OutOfVerifiedRange : Error {
    using Error::Error;
};

struct UnknownSuite : Error {
    using Error::Error;
};

// Raised when computed bounds contradict each other (a lower bound above an
// upper bound, or two exact formulas that disagree).  Always a bug or a
// misapplied hypothesis, never a legitimate runtime outcome.
struct InconsistentBounds : Error {
    using Error::Error;
};

struct ConflictingTheorems : Error {
    using Error::Error;
};

} // namespace capax
