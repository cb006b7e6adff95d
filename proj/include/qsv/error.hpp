#pragma once

#include <stdexcept>
#include <string>

namespace qsv {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two matrices (or a matrix and a state) have incompatible dimensions.
class ShapeMismatch : public Error {
public:
    using Error::Error;
};

/// A matrix failed the unit condition M†M = I at the requested tolerance.
/// Carries the largest per-component deviation that was observed.
class NotUnit : public Error {
public:
    NotUnit(const std::string& what, double deviation)
        : Error(what), deviation_(deviation) {}

    double deviation() const noexcept { return deviation_; }

private:
    double deviation_;
};

/// A state was constructed from a matrix that is not an n-by-1 column.
class NotAColumn : public Error {
public:
    using Error::Error;
};

/// A 1-based component or outcome index lies outside its valid range.
class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// A measurement outcome that should occur with probability zero was seen,
/// or an outcome outside the classifiable set was passed to classify().
class UnexpectedOutcome : public Error {
public:
    using Error::Error;
};

/// An outcome distribution does not sum to one within tolerance.
class InvalidDistribution : public Error {
public:
    using Error::Error;
};

/// A scalar that must be finite was NaN or infinite.
class NonFiniteValue : public Error {
public:
    using Error::Error;
};

/// A requested dimension exceeds the configured soft limit.
class DimensionLimit : public Error {
public:
    using Error::Error;
};

/// An argument violated a documented precondition.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

} // namespace qsv
