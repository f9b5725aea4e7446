#ifndef STELLAR_ERRORS_HPP
#define STELLAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace stellar {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed user input (duplicate vertices in a face, bad facet file, ...).
class MalformedInputError : public Error {
public:
    using Error::Error;
};

/// A face argument is not a face of the complex it was queried against.
class NotAFaceError : public Error {
public:
    using Error::Error;
};

/// Vertex label collision (join of complexes with overlapping labels,
/// or a "fresh" vertex that is already present).
class LabelCollisionError : public Error {
public:
    using Error::Error;
};

/// Preconditions of an inverse edge subdivision failed; the message
/// names the failing condition.
class NotInvertibleError : public Error {
public:
    using Error::Error;
};

/// A backtracking plan step could not be applied.
class InvalidPlanError : public Error {
public:
    InvalidPlanError(int step_index, const std::string& what)
        : Error("plan step " + std::to_string(step_index) + ": " + what),
          step_index(step_index) {}

    int step_index;
};

/// The Case 1 / Case 2 split of the valley replacement was violated.
class WrongCaseError : public Error {
public:
    using Error::Error;
};

/// An h-vector without the sphere symmetry h_i = h_{d-i} was handed to a
/// gamma-vector computation.
class NotASphereError : public Error {
public:
    using Error::Error;
};

}  // namespace stellar

#endif  // STELLAR_ERRORS_HPP
