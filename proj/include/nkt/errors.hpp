#pragma once

#include <stdexcept>

namespace nkt {

// Base type so callers can catch everything thrown by this library at once.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A documented precondition was violated (vertex out of range, self-loop,
// non-independent removal set, zero-part clique union, ...).
class InvalidInputError : public Error {
public:
    using Error::Error;
};

// The request exceeds a hard size cap; the message names the cap.
class UnsupportedSizeError : public Error {
public:
    using Error::Error;
};

// Malformed serialized input (graph6 string, cache file).
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace nkt
