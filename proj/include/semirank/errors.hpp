#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semirank {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input: bad character, ragged rows, empty denominator, ...
class FormatError : public Error {
public:
    using Error::Error;
};

/// Operand dimensions do not fit the operation.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// An index points outside the matrix.
class BoundsError : public Error {
public:
    using Error::Error;
};

/// An entry lies outside the domain the operation requires.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A linear system that must be solvable has no solution.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

/// A supplied witness failed verification.
class VerificationError : public Error {
public:
    using Error::Error;
};

/// An enumeration limit or search budget was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// A search ran out of budget; carries the best bounds proven so far.
/// upper_bound is SIZE_MAX when no feasible solution was found in time.
class BudgetExhausted : public ResourceError {
public:
    BudgetExhausted(const std::string& what, std::size_t lower, std::size_t upper)
        : ResourceError(what), lower_bound(lower), upper_bound(upper) {}

    std::size_t lower_bound;
    std::size_t upper_bound;
};

} // namespace semirank
