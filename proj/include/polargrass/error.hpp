#pragma once

#include <stdexcept>
#include <string>

namespace polargrass {

// Base for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violated by the caller (bad parameters, mismatched operands).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A requested enumeration or search is larger than its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Parameters are well formed but outside what the engine builds.
class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace polargrass
