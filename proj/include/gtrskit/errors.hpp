#pragma once

#include <stdexcept>
#include <string>

namespace gtrskit {

// Elements from two different field contexts were mixed in one operation.
class FieldMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A parameter violates one of the named inequalities that gate an operation.
// `inequality` holds the violated condition in source form, e.g. "2k <= n".
class ParamWindowError : public std::domain_error {
public:
    ParamWindowError(const std::string& msg, std::string inequality)
        : std::domain_error(msg), inequality_(std::move(inequality)) {}
    const std::string& inequality() const noexcept { return inequality_; }

private:
    std::string inequality_;
};

// A parameter window contains no admissible integer at all (as opposed to a
// concrete parameter missing it); carries the same inequality payload.
class EmptyWindowError : public ParamWindowError {
public:
    using ParamWindowError::ParamWindowError;
};

// A computation exceeded a configured work guard (e.g. exhaustive search size).
class GuardExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace gtrskit
