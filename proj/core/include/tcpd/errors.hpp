#pragma once

#include <stdexcept>
#include <string>

namespace tcpd {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class ShapeMismatch : public Error {
public:
    using Error::Error;
};

class RingMismatch : public Error {
public:
    using Error::Error;
};

/// Inverse of zero requested in a prime field.
class ZeroInverse : public Error {
public:
    ZeroInverse() : Error("inverse of zero") {}
};

/// Inverse requested for a multiple of x in F[x]/(x^H).
class NotAUnit : public Error {
public:
    NotAUnit() : Error("element is not a unit (constant term is zero)") {}
};

/// Brute-force enumeration refused because the search space exceeds its guard.
class TooLarge : public Error {
public:
    using Error::Error;
};

/// A certificate produced by a search failed re-evaluation. Always a bug.
class VerificationFailure : public Error {
public:
    using Error::Error;
};

} // namespace tcpd
