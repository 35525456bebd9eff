#pragma once

#include <stdexcept>
#include <string>

namespace hermitia {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Gamma (or a Gamma-valued closed form) evaluated at one of its poles.
class PoleError : public Error {
public:
    using Error::Error;
};

/// Argument outside the domain where an operation is defined.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A series or quadrature did not meet its tolerance within the work cap.
class NonConvergence : public Error {
public:
    using Error::Error;
};

/// Lower parameter of a hypergeometric series hit a nonpositive integer.
class ParameterPole : public Error {
public:
    using Error::Error;
};

/// Hermite power series requested at a nonnegative integer degree.
class DegenerateDegree : public Error {
public:
    using Error::Error;
};

/// An integrand produced a non-finite sample.
class SingularIntegrand : public Error {
public:
    using Error::Error;
};

/// A result overflowed or became NaN.
class RangeError : public Error {
public:
    using Error::Error;
};

}  // namespace hermitia
