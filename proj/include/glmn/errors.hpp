#pragma once

#include <stdexcept>
#include <string>

namespace glmn {

// Every library failure derives from Error so the CLI can map it to an exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Arguments that do not describe the same superalgebra, or malformed sizes.
class ParameterError : public Error {
public:
    using Error::Error;
};

// Mathematically meaningless input (non-dominant weight, weight outside a block, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Work would exceed the desk-scale bounds of an enumerator or constructor.
class ResourceError : public Error {
public:
    using Error::Error;
};

// A precondition on an operator failed (for example x*x != 0 for an odd element).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// No quasipolynomial with an admissible period reproduces the data.
class FitError : public Error {
public:
    using Error::Error;
};

// A self-check failed; indicates a bug rather than bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace glmn
