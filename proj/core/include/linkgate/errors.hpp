#pragma once

#include <stdexcept>
#include <string>

namespace linkgate {

// Input that could not be parsed (CLI exit code 2).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Valid input outside an operation's precondition (CLI exit code 3).
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Cooperative budget exhausted (CLI exit code 4).
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace linkgate
