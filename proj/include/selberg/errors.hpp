#pragma once

#include <stdexcept>
#include <string>

namespace selberg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside an operation's documented domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Evaluation at a pole (of Γ, of a series, ...).
class PoleError : public DomainError {
public:
    PoleError(const std::string& what, long long location)
        : DomainError(what), location_(location) {}
    long long location() const noexcept { return location_; }

private:
    long long location_;
};

/// A series, quadrature or iteration could not meet the requested tolerance
/// within its term budget. Raised instead of returning a degraded value.
class AccuracyError : public Error {
public:
    using Error::Error;
};

/// Structural failure: no character matches, reconstruction impossible, ...
class NotFoundError : public Error {
public:
    using Error::Error;
};

}  // namespace selberg
