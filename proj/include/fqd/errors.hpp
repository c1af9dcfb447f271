#pragma once

#include <stdexcept>
#include <string>

namespace fqd {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid parameters or configuration (alpha out of range, bad support bounds, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Gamma function requested at a non-positive integer.
class PoleError : public Error {
public:
    using Error::Error;
};

/// A series or quadrature failed to meet its tolerance within the configured budget.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// A quantity left the double-precision exponent range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// The extended-precision oracle would need more bits or terms than allowed.
class PrecisionBudgetError : public Error {
public:
    using Error::Error;
};

/// Operation requested for a parameter regime it does not apply to.
class WrongRegimeError : public Error {
public:
    using Error::Error;
};

/// A least-squares fit has too few samples, no spread in t, or non-positive values.
class DegenerateFitError : public Error {
public:
    using Error::Error;
};

}  // namespace fqd
