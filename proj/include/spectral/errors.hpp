#pragma once

#include <stdexcept>
#include <string>

namespace spectral {

// Base class for all library errors. CLI maps subclasses to exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caller passed arguments that violate an operation's precondition.
struct UsageError : Error {
    using Error::Error;
};

// divide_exact was asked for a quotient that does not exist.
// Inside a recursion engine this signals a violated cancellation, i.e. a bug.
struct InexactDivision : Error {
    using Error::Error;
};

// antiderivative_from hit a nonzero t^{-1} coefficient.
struct LogarithmicObstruction : Error {
    using Error::Error;
};

// Series reciprocal of something with no invertible leading coefficient.
struct NotInvertible : Error {
    using Error::Error;
};

// newton_solve did not converge within its iteration budget.
struct SolverFailure : Error {
    using Error::Error;
};

// A series was consumed beyond its truncation order.
struct TruncationError : Error {
    using Error::Error;
};

// The overdetermined ELSV fit is inconsistent.
struct PolynomialityViolation : Error {
    using Error::Error;
};

// Key outside the supported family / enumeration budget.
struct Unsupported : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace spectral
