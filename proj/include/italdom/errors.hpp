#pragma once

#include <stdexcept>
#include <string>

namespace italdom {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed arguments: bad letters, length mismatches, out-of-range ranks.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// An instance would exceed a configured size limit.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Parameters outside the range where a construction is defined.
class OutOfRegime : public Error {
public:
    using Error::Error;
};

/// A self-check failed; indicates a bug, never bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace italdom
