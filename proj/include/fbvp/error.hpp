#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fbvp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the admissible range (bad order, non-positive step count, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Result not representable as a finite double.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Failure inside a numerical solver. Carries the grid point where it happened.
class SolverError : public Error {
public:
    SolverError(const std::string& what, double t, double y)
        : Error(what), t_(t), y_(y) {}

    double t() const noexcept { return t_; }
    double y() const noexcept { return y_; }

private:
    double t_;
    double y_;
};

/// Secant denominator vanished: the shooting map is flat between the two slopes.
class DegenerateSecant : public Error {
public:
    using Error::Error;
};

/// A bracketing search found no sign change in its scan range.
class RootNotFound : public Error {
public:
    using Error::Error;
};

/// Two trajectories never cross inside the horizon.
class NoIntersection : public Error {
public:
    using Error::Error;
};

/// Malformed right-hand-side expression.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset, std::string expected)
        : Error(what), offset_(offset), expected_(std::move(expected)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

/// Expression evaluated outside its domain (log of a negative, x/0, ...).
class EvalError : public Error {
public:
    EvalError(const std::string& what, std::string subexpression)
        : Error(what), subexpression_(std::move(subexpression)) {}

    const std::string& subexpression() const noexcept { return subexpression_; }

private:
    std::string subexpression_;
};

}  // namespace fbvp
