#pragma once

#include <stdexcept>
#include <string>

namespace mmt {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (scalar strings, JSON files).
struct ParseError : Error {
    using Error::Error;
};

/// Dimension or shape mismatch between operands.
struct ShapeError : Error {
    using Error::Error;
};

/// Operation not possible in the configured cyclotomic field
/// (wrong order, missing root of unity, mixed fields).
struct FieldError : Error {
    using Error::Error;
};

struct SingularMatrixError : Error {
    using Error::Error;
};

/// Finite-order precondition violated (a^m != identity and friends).
struct OrderError : Error {
    using Error::Error;
};

/// An enumeration exceeded its configured cap (closure of a possibly
/// infinite group, orbit of an element of unknown order).
struct CapError : Error {
    using Error::Error;
};

} // namespace mmt
