#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace incore {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A formula or set lies outside the system's well-formed formulas.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed system text; carries the 1-based line number (0 = whole file).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class NotDerivable : public Error {
 public:
  explicit NotDerivable(const std::string& sentence)
      : Error("not derivable: " + sentence) {}
};

/// Depth-0 sentences have no (n, m) index.
class AxiomHasNoIndex : public Error {
 public:
  explicit AxiomHasNoIndex(const std::string& sentence)
      : Error("axiom has no index: " + sentence) {}
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(std::size_t budget)
      : Error("budget exceeded: more than " + std::to_string(budget) +
              " partial sequences"),
        budget_(budget) {}

  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t budget_;
};

class InvalidWitness : public Error {
 public:
  using Error::Error;
};

/// Raised when a computed classification contradicts the safety theorem.
/// Only an implementation defect can trigger it.
class SoundnessFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace incore
