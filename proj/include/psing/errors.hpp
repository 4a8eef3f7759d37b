#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace psing {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Named validation rules. Each maps to a distinct error code so callers
/// (and the CLI) can tell which rule failed.
enum class Rule {
    NotPrime,
    EmptyParts,
    PartBelowOne,
    PartExceedsP,
    DivisibleJump,
    OutOfRange,
    Syntax,
    Precondition,
};

std::string_view rule_name(Rule rule) noexcept;

/// Input rejected by a validation rule.
class ValidationError : public Error {
public:
    ValidationError(Rule rule, const std::string& message)
        : Error(message), rule_(rule) {}

    Rule rule() const noexcept { return rule_; }

private:
    Rule rule_;
};

/// An exact-integer operation left the 128-bit range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Two computations that must agree did not. Always a bug.
class InconsistencyError : public Error {
public:
    using Error::Error;
};

/// An enumeration would exceed its configured size cap.
class CapExceededError : public Error {
public:
    using Error::Error;
};

}  // namespace psing
