#pragma once

#include <stdexcept>
#include <string>

namespace radolab {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed equation text, DIMACS, model or certificate input.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Equation with fewer than two variables or a variable whose coefficient cancels.
class DegenerateEquation : public Error {
public:
    using Error::Error;
};

class ArityMismatch : public Error {
public:
    using Error::Error;
};

/// Signed 64-bit overflow in a coefficient or linear-form evaluation.
class ArithmeticOverflow : public Error {
public:
    using Error::Error;
};

/// Enumeration or search exceeded its configured cap.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class UnsupportedFamily : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A SAT model that does not describe a coloring (missing variables, two colors for one integer).
class ModelError : public Error {
public:
    using Error::Error;
};

} // namespace radolab
