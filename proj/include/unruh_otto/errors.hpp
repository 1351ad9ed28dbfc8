#pragma once

#include <stdexcept>
#include <string>

namespace unruh_otto {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// An argument is within the pole guard of a singularity.
class PoleProximity : public Error {
public:
    using Error::Error;
};

/// A series or quadrature failed to reach its tolerance within its budget.
class NonConvergence : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// The closed-cycle constraint has no admissible population.
class ConstraintUnsatisfiable : public Error {
public:
    using Error::Error;
};

} // namespace unruh_otto
