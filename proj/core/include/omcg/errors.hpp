#pragma once

#include <stdexcept>
#include <string>

namespace omcg {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (sign strings, system files, matrices).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Operands live on different ground sets.
class GroundMismatchError : public Error {
public:
    using Error::Error;
};

/// A precondition on parameters was violated (bad rank, bounds, missing vertex, ...).
class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

/// A configured resource budget (covector cap, time cap, ground-set size) was exceeded.
class ResourceError : public Error {
public:
    ResourceError(std::string budget, const std::string& what)
        : Error(what), budget_(std::move(budget)) {}

    /// Name of the budget that was exhausted ("covectors", "time", "ground-size", ...).
    const std::string& budget() const { return budget_; }

private:
    std::string budget_;
};

/// Lattice is not graded, so no rank function exists.
class NotGradedError : public Error {
public:
    using Error::Error;
};

} // namespace omcg
