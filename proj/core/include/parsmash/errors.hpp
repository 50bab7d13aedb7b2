#pragma once

#include <stdexcept>
#include <string>

namespace parsmash {

// Every failure raised by the library carries a short machine-readable code
// (e.g. "NotAssociative") and, when one exists, a witness naming the
// offending indices.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message, std::string witness = {})
      : std::runtime_error(code + ": " + message + (witness.empty() ? "" : " [" + witness + "]")),
        code_(std::move(code)),
        witness_(std::move(witness)) {}

  const std::string& code() const noexcept { return code_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string code_;
  std::string witness_;
};

/// Shapes of operands do not fit together.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& message) : Error("DimensionMismatch", message) {}
};

/// A mathematical axiom failed on concrete data.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed a configured size limit.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& message) : Error("BudgetExceeded", message) {}
};

/// Malformed user input; the witness is the JSON path when available.
class InputError : public Error {
 public:
  InputError(const std::string& message, std::string path = {})
      : Error("InputError", message, std::move(path)) {}
};

}  // namespace parsmash
