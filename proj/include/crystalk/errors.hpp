#pragma once

#include <stdexcept>
#include <string>

namespace crystalk {

// Two failure families with distinct CLI exit codes: InputError means the
// caller handed us something invalid (exit 1), IdentityError means a proven
// identity failed inside the engine, i.e. a math bug (exit 2).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputError : Error {
    using Error::Error;
};

struct IdentityError : Error {
    using Error::Error;
};

struct WrongOrder : InputError {
    long power;
    explicit WrongOrder(long j)
        : InputError("WrongOrder(" + std::to_string(j) + "): generator does not have exact order m"),
          power(j) {}
};

struct NotFreeOutsideOrigin : InputError {
    long power;
    explicit NotFreeOutsideOrigin(long j)
        : InputError("NotFreeOutsideOrigin(" + std::to_string(j) +
                     "): det(T^j - I) = 0, nontrivial fixed vectors exist"),
          power(j) {}
};

struct NotADivisor : InputError {
    explicit NotADivisor(long d, long m)
        : InputError("NotADivisor: " + std::to_string(d) + " does not divide " + std::to_string(m)) {}
};

struct DimensionOverflow : InputError {
    using InputError::InputError;
};

struct NotIntegral : IdentityError {
    using IdentityError::IdentityError;
};

struct NotSylow : IdentityError {
    using IdentityError::IdentityError;
};

struct NonIntegralMultiplicity : IdentityError {
    using IdentityError::IdentityError;
};

struct NonIntegralFormula : IdentityError {
    using IdentityError::IdentityError;
};

struct NonIntegralRank : IdentityError {
    using IdentityError::IdentityError;
};

struct NonIntegralEulerClass : IdentityError {
    using IdentityError::IdentityError;
};

struct CrossCheckMismatch : IdentityError {
    using IdentityError::IdentityError;
};

}  // namespace crystalk
