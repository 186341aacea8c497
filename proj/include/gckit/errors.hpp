#ifndef GCKIT_ERRORS_HPP
#define GCKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gckit {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text (polynomial grammar, document JSON, rationals).
struct ParseError : Error {
    using Error::Error;
};

/// Operands live in incompatible spaces (variable sets, dimensions).
struct DimensionError : Error {
    using Error::Error;
};

/// An algebraic precondition or invariant failed; the message names the
/// violated identity.
struct ConstraintError : Error {
    using Error::Error;
};

/// The requested check is outside the representable cases (e.g. a tangent
/// distribution of generically non-full rank).  Distinct from a failure.
struct UnsupportedError : Error {
    using Error::Error;
};

} // namespace gckit

#endif
