#pragma once

#include <stdexcept>
#include <string>

namespace rrg {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph / colouring / config text.
class ParseError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its domain (e.g. k = 0, partial colouring).
class DomainError : public Error {
public:
    using Error::Error;
};

/// An exponential scan or search refused to start because it would exceed its cap.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

} // namespace rrg
