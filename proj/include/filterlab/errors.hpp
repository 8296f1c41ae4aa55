#pragma once

#include <stdexcept>
#include <string>

namespace filterlab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Widths disagree, an index is out of range, or a member is not a subset of the universe.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// An input exceeds a size bound of the operation.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// A hypothesis of a construction does not hold (e.g. the family lacks the FIP).
class PreconditionError : public Error {
public:
    using Error::Error;
};

} // namespace filterlab
