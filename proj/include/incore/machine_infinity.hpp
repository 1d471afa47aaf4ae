#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "incore/system.hpp"

namespace incore {

inline constexpr unsigned kDefaultPaMiCap = 6;

/// Bounded ground fragment of Peano arithmetic on numerals 0 .. s^{M+1}0
/// with the machine-infinity axiom s^{M+1}0 = s^M0. Equality reasoning is
/// grounded into reiteration (a derived equation stays available at the next
/// step; D itself is not inflationary), symmetry, transitivity, successor
/// congruence and successor injectivity rules. Throws DomainError when m is 0
/// or above `cap`.
DeductionSystem generate_pa_mi(unsigned m, unsigned cap = kDefaultPaMiCap);

/// "s...s0" with k successors.
std::string numeral(unsigned k);

/// Integer confined to [-M, M]; `saturated` is sticky once any clamp happened.
struct SatValue {
  std::int64_t value = 0;
  bool saturated = false;

  friend bool operator==(const SatValue&, const SatValue&) = default;
};

enum class ArithOp { add, sub, mul };

/// Exact result clamped to [-M, M]. So with a.value == M, add(a, 1) == M.
SatValue saturating_op(ArithOp op, SatValue a, SatValue b, std::int64_t m);

/// Integer expression tree over add, sub, mul.
struct Expr {
  struct Binary;
  std::variant<std::int64_t, std::shared_ptr<const Binary>> node;

  static Expr literal(std::int64_t v) { return {v}; }
  static Expr binary(ArithOp op, Expr lhs, Expr rhs);
};

struct Expr::Binary {
  ArithOp op;
  Expr lhs;
  Expr rhs;
};

/// Infix syntax: integers, + - * (or U+00D7), parentheses, unary minus.
/// Throws ParseError on malformed input.
Expr parse_expr(std::string_view text);
std::string to_string(const Expr& e);

struct GuardVerdict {
  SatValue result;
  bool safe = false;  // every literal and intermediate stayed strictly inside (-M, M)
};

/// Bottom-up saturating evaluation. Throws DomainError when a literal lies
/// outside [-M, M] or M < 1.
GuardVerdict eval_guarded(const Expr& e, std::int64_t m);

}  // namespace incore
