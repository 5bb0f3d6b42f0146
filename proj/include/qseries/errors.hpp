#pragma once

#include <stdexcept>
#include <string>

namespace qseries {

// Base of every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidOrder : public Error {
public:
    using Error::Error;
};

class NotInvertible : public Error {
public:
    using Error::Error;
};

class InvalidResidue : public Error {
public:
    using Error::Error;
};

class ArityError : public Error {
public:
    using Error::Error;
};

// Coefficient requested at or above the truncation order.
class RangeError : public Error {
public:
    using Error::Error;
};

// Theta parameters whose exponent sum is not positive.
class DivergentParameters : public Error {
public:
    using Error::Error;
};

// Theorem-family parameters that violate the family's hypotheses.
class InvalidCase : public Error {
public:
    using Error::Error;
};

} // namespace qseries
