#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace incore {

/// Ordered set of single-character symbols. Declaration order is kept.
class Alphabet {
 public:
  Alphabet() = default;
  /// Throws DomainError on empty input, duplicates, whitespace or '#'.
  explicit Alphabet(std::vector<char> symbols);

  const std::vector<char>& symbols() const noexcept { return symbols_; }
  bool contains(char c) const noexcept;
  /// First character of `text` outside the alphabet, or npos.
  std::size_t first_foreign(std::string_view text) const noexcept;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<char> symbols_;
};

/// A well-formed formula: a non-empty, whitespace-free symbol string.
class Formula {
 public:
  Formula() = default;
  explicit Formula(std::string text);

  const std::string& text() const noexcept { return text_; }
  /// Number of symbols, repetitions counted.
  std::size_t length() const noexcept { return text_.size(); }

  friend auto operator<=>(const Formula&, const Formula&) = default;
  friend bool operator==(const Formula&, const Formula&) = default;

 private:
  std::string text_;
};

inline std::size_t formula_length(const Formula& f) { return f.length(); }

/// Canonically (lexicographically) ordered, duplicate-free set of formulas.
using FormulaSet = std::set<Formula>;

FormulaSet make_set(std::initializer_list<std::string_view> texts);

bool is_subset(const FormulaSet& a, const FormulaSet& b);
FormulaSet set_union(const FormulaSet& a, const FormulaSet& b);
FormulaSet set_difference(const FormulaSet& a, const FormulaSet& b);
std::size_t total_length(const FormulaSet& s);

/// "{a, b, c}" in canonical order.
std::string to_string(const FormulaSet& s);

}  // namespace incore
