#pragma once

#include <stdexcept>
#include <string>

namespace dyckl {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A character outside the declared alphabet was seen while parsing.
struct InvalidCharacterError : Error {
    using Error::Error;
};

// A prefix of the word dips below the axis (or violates x >= y >= z).
struct PrefixViolationError : Error {
    using Error::Error;
};

// The word does not end on the axis / letter counts are unequal.
struct UnbalancedWordError : Error {
    using Error::Error;
};

// A ballot-path argument does not have its first down step where required.
struct BallotPreconditionError : Error {
    using Error::Error;
};

// An insertion position j is outside its admissible range.
struct IndexOutOfRangeError : Error {
    using Error::Error;
};

// A star word does not carry the number of '*' letters an operation needs.
struct WrongStarCountError : Error {
    using Error::Error;
};

// A parameter that must be an odd prime is not.
struct NotPrimeError : Error {
    using Error::Error;
};

// A brute-force request exceeds the configured enumeration bound.
struct OracleBoundError : Error {
    using Error::Error;
};

// An inverse map was applied to a word outside its declared domain.
struct DomainError : Error {
    using Error::Error;
};

} // namespace dyckl
