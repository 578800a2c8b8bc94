#pragma once

#include <stdexcept>
#include <string>

namespace ckg {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// The projective chart degenerates (x0 + x5 = 0, or x5 = 0 on the
// conformal side).
class ChartSingularityError : public Error {
public:
    using Error::Error;
};

// A series or iteration hit its term budget before reaching tolerance.
// Carries the partial value so callers can inspect how far it got.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double partial, long terms)
        : Error(what), partial_value(partial), terms_used(terms) {}
    double partial_value;
    long terms_used;
};

// Grid shape inconsistent with what an operator needs.
class ShapeError : public Error {
public:
    using Error::Error;
};

// A grid axis touches (or comes too close to) a coordinate singularity.
class SingularAxisError : public Error {
public:
    using Error::Error;
};

// (r, x5) outside the r > x5 >= 0 wedge of the hyperbolic chart.
class WedgeError : public Error {
public:
    using Error::Error;
};

// Quadratic for mu has no real root.
class ComplexRootError : public Error {
public:
    using Error::Error;
};

// Bessel order would be imaginary (4 + Lambda < 0).
class ImaginaryOrderError : public Error {
public:
    using Error::Error;
};

// Two independent solution methods disagree beyond the allowed band.
class CrossValidationError : public Error {
public:
    using Error::Error;
};

} // namespace ckg
