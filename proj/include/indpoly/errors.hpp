#pragma once

#include <stdexcept>
#include <string>

namespace indpoly {

// Input could not be parsed; `offset` is the byte position of the problem.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::invalid_argument(what + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// A documented precondition of an operation was violated.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The request exceeds a stated size budget.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal invariant failed; indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace indpoly
