#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace secnc {

// Input text could not be parsed. Carries the 1-based line number when known.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string message, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

// A configured enumeration budget would be exceeded.
class BudgetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace secnc
