#include "incore/formula.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>

#include "incore/errors.hpp"

namespace incore {

namespace {

bool is_reserved(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0 || c == '#';
}

}  // namespace

Alphabet::Alphabet(std::vector<char> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw DomainError("alphabet is empty");
  std::set<char> seen;
  for (char c : symbols_) {
    if (is_reserved(c) || c == '\0')
      throw DomainError("alphabet symbol must not be whitespace or '#'");
    if (!seen.insert(c).second)
      throw DomainError(std::string("duplicate alphabet symbol '") + c + "'");
  }
}

bool Alphabet::contains(char c) const noexcept {
  return std::find(symbols_.begin(), symbols_.end(), c) != symbols_.end();
}

std::size_t Alphabet::first_foreign(std::string_view text) const noexcept {
  for (std::size_t i = 0; i < text.size(); ++i)
    if (!contains(text[i])) return i;
  return std::string_view::npos;
}

Formula::Formula(std::string text) : text_(std::move(text)) {
  if (text_.empty()) throw DomainError("formula is empty");
  if (std::any_of(text_.begin(), text_.end(), is_reserved))
    throw DomainError("formula contains whitespace or '#': \"" + text_ + "\"");
}

FormulaSet make_set(std::initializer_list<std::string_view> texts) {
  FormulaSet out;
  for (auto t : texts) out.emplace(std::string(t));
  return out;
}

bool is_subset(const FormulaSet& a, const FormulaSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

FormulaSet set_union(const FormulaSet& a, const FormulaSet& b) {
  FormulaSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

FormulaSet set_difference(const FormulaSet& a, const FormulaSet& b) {
  FormulaSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(out, out.end()));
  return out;
}

std::size_t total_length(const FormulaSet& s) {
  std::size_t n = 0;
  for (const auto& f : s) n += f.length();
  return n;
}

std::string to_string(const FormulaSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& f : s) {
    if (!first) out += ", ";
    out += f.text();
    first = false;
  }
  return out + "}";
}

}  // namespace incore
