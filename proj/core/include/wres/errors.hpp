#pragma once

#include <stdexcept>
#include <string>

namespace wres {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad family parameters, out-of-range k, and similar caller mistakes.
struct InvalidParameterError : Error {
  using Error::Error;
};

// Structurally bad in-memory input (e.g. literal on variable 0).
struct MalformedInputError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

struct BudgetExceededError : Error {
  using Error::Error;
};

}  // namespace wres
