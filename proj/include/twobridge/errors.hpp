#pragma once

#include <stdexcept>
#include <string>

namespace twobridge {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// User-facing input problems (CLI exit code 1).
struct InvalidInput : Error {
    using Error::Error;
};

// Rational is not a valid 2-bridge parameter (parity, coprimality, range).
struct InvalidRational : InvalidInput {
    using InvalidInput::InvalidInput;
};

// A continued-fraction evaluation hit a zero denominator.
struct DegenerateFraction : InvalidInput {
    using InvalidInput::InvalidInput;
};

// Exact division left a nonzero remainder.
struct InexactDivision : InvalidInput {
    using InvalidInput::InvalidInput;
};

// Extended-gcd certificate failed or produced a non-integer inverse.
struct NotInvertible : InvalidInput {
    using InvalidInput::InvalidInput;
};

// Knot is not p-admissible, so the lambda quotient is not defined.
struct NotInHp : InvalidInput {
    using InvalidInput::InvalidInput;
};

// theta shares a factor with its derivative.
struct NonSquarefreeTheta : InvalidInput {
    using InvalidInput::InvalidInput;
};

// Internal cross-checks failed: a bug, never bad input (CLI exit code 2).
struct InternalVerificationFailure : Error {
    using Error::Error;
};

// Neither sign choice matches the t=1 evaluation target.
struct SignUnresolvable : InternalVerificationFailure {
    using InternalVerificationFailure::InternalVerificationFailure;
};

} // namespace twobridge
