#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidcover {

// Input text could not be parsed. `position` is a 0-based offset into the input.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& msg, std::size_t position)
        : std::invalid_argument(msg + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// A precondition on the mathematical input is violated (wrong strand count,
// non-knot closure, even strand number where odd is required, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Handle reduction exceeded its step budget.
class StepLimitError : public std::runtime_error {
public:
    StepLimitError(const std::string& msg, long long steps)
        : std::runtime_error(msg), steps_(steps) {}

    long long steps() const { return steps_; }

private:
    long long steps_;
};

// An internal invariant failed (non-exact division where exactness is
// guaranteed, asymmetric Alexander polynomial, floor sandwich breach).
// Indicates a bug, never bad user input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace braidcover
