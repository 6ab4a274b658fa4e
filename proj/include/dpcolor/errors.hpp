#pragma once

#include <stdexcept>
#include <string>

namespace dpc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A formula that requires exact division received non-divisible inputs.
class DivisibilityError : public Error {
public:
    using Error::Error;
};

/// A construction's certified count disagreed with its independent recount.
class CertificationError : public Error {
public:
    using Error::Error;
};

/// Text input could not be parsed.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& msg)
        : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// An exhaustive search would exceed the caller's budget. `required()` is the
/// exact amount of work (in the caller's budget unit) the search would need.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::string required, std::string budget)
        : Error("budget exceeded: search requires " + required + " units, budget is " + budget),
          required_(std::move(required)) {}

    const std::string& required() const noexcept { return required_; }

private:
    std::string required_;
};

}  // namespace dpc
