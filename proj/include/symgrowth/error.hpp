#pragma once

#include <stdexcept>
#include <string>

namespace symgrowth {

/// Base of every error raised by the library. `kind()` is a stable
/// machine-readable tag used by the CLI's structured error output.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

/// Encoding that does not name an element of the group.
class InvalidElement : public Error {
public:
    explicit InvalidElement(const std::string& what) : Error("invalid_element", what) {}
};

/// Operands live in different groups.
class ContextMismatch : public Error {
public:
    explicit ContextMismatch(const std::string& what) : Error("context_mismatch", what) {}
};

/// A parameter (threshold, k, epsilon, group size...) is out of its domain.
class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what) : Error("invalid_argument", what) {}
};

class EmptySet : public Error {
public:
    explicit EmptySet(const std::string& what) : Error("empty_set", what) {}
};

class SubsetViolation : public Error {
public:
    explicit SubsetViolation(const std::string& what) : Error("subset_violation", what) {}
};

/// Work would exceed the configured pair budget.
class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(const std::string& what) : Error("budget_exceeded", what) {}
};

/// Malformed instance, certificate or group description.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error("parse_error", what) {}
};

/// A proven inequality failed at runtime. Always a bug, never bad input.
class InvariantViolation : public Error {
public:
    explicit InvariantViolation(const std::string& what) : Error("invariant_violation", what) {}
};

}  // namespace symgrowth
