#pragma once

#include <stdexcept>
#include <string>

namespace et {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when a decoded index is not the code of an admitted term.
struct DecodeError : Error {
  explicit DecodeError(const std::string& msg) : Error(msg) {}
};

// A bounded search ran out of steps. Distinguishes "not found yet" from
// "not in the image", which is undecidable in general.
struct BudgetExhausted : Error {
  explicit BudgetExhausted(const std::string& msg) : Error(msg) {}
};

struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

struct FieldMismatch : Error {
  explicit FieldMismatch(const std::string& msg) : Error(msg) {}
};

struct InvalidField : Error {
  explicit InvalidField(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + msg : msg), line_no(line) {}
  std::size_t line_no;
};

struct NotABasisVector : Error {
  explicit NotABasisVector(const std::string& msg) : Error(msg) {}
};

}  // namespace et
