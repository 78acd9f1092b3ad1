#pragma once

#include <stdexcept>
#include <string>

namespace qwz {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph input (edge list or graph6).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A graph does not satisfy the hypotheses an operation requires
/// (connectedness, simplicity, minimum degree, regularity).
class HypothesisError : public Error {
public:
    using Error::Error;
};

/// An exact identity failed, e.g. a division that was expected to be exact
/// left a remainder.
class IdentityViolation : public Error {
public:
    using Error::Error;
};

/// The caller-supplied degree bound of a polynomial determinant was too small.
class InconsistentBound : public Error {
public:
    using Error::Error;
};

/// An exponential-cost routine was asked to run beyond its size guard.
class ResourceGuard : public Error {
public:
    using Error::Error;
};

/// Root finding did not converge within the iteration cap.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

}  // namespace qwz
