#pragma once

#include <stdexcept>
#include <string>

namespace vdw {

/// Base class for all workbench errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

/// Syntax error from the polynomial parser; `position` is a byte offset into
/// the source text.
class ParseError : public Error {
public:
    ParseError(const std::string& what_arg, std::size_t position)
        : Error(what_arg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Input or scenario failed a structural invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A numeric routine exhausted its budget without converging.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// A decision procedure ran out of certificates in both directions.
class InconclusiveError : public Error {
public:
    using Error::Error;
};

}  // namespace vdw
