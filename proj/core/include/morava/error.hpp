#pragma once

#include <stdexcept>
#include <string>

namespace morava {

// Raised when a mathematical precondition fails (non-unit, wrong prime, ...)
// or when a result cannot be certified at the working precision.
class ComputationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised for malformed user input (expression syntax, bad parameters).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace morava
