#pragma once

#include <stdexcept>
#include <string>

namespace loudper {

// Common base so callers can catch every library error with one handler.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input lies outside the documented domain of the operation.
struct DomainError : Error {
    using Error::Error;
};

// Evaluation requested exactly at a pole of the function.
struct PoleError : Error {
    using Error::Error;
};

// Geometric degeneracy: the conic's discriminant vanishes (double root).
struct DegenerateError : Error {
    using Error::Error;
};

// Trajectory left the integration bounding box without reaching the section.
struct EscapeError : Error {
    using Error::Error;
};

// Step budget exhausted before the integration target was reached.
struct StepLimitError : Error {
    using Error::Error;
};

// Root bracketing failed: the function has equal signs at both endpoints.
struct BracketError : Error {
    using Error::Error;
};

// Parameter is not one of the four isochronous centers.
struct NotIsochroneError : Error {
    using Error::Error;
};

// Least-squares basis is numerically rank-deficient.
struct IllConditionedError : Error {
    using Error::Error;
};

// Parameter falls outside the expansion cases the library implements.
struct UnsupportedCaseError : Error {
    using Error::Error;
};

// A series or quadrature failed to reach its stopping rule within budget.
struct ConvergenceError : Error {
    using Error::Error;
};

// Interval arithmetic could not decide a sign even at maximum precision.
struct PrecisionError : Error {
    using Error::Error;
};

} // namespace loudper
