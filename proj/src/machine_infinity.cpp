#include "incore/machine_infinity.hpp"

#include <cctype>
#include <vector>

#include "incore/errors.hpp"

namespace incore {

std::string numeral(unsigned k) { return std::string(k, 's') + "0"; }

DeductionSystem generate_pa_mi(unsigned m, unsigned cap) {
  if (m < 1) throw DomainError("machine infinity must be at least 1");
  if (m > cap)
    throw DomainError("machine infinity " + std::to_string(m) + " exceeds cap " +
                      std::to_string(cap));

  const unsigned top = m + 1;
  auto eq = [](unsigned a, unsigned b) { return Formula(numeral(a) + "=" + numeral(b)); };

  SystemSpec spec;
  spec.alphabet = Alphabet({'s', '0', '='});
  for (unsigned a = 0; a <= top; ++a)
    for (unsigned b = 0; b <= top; ++b) spec.wffs.insert(eq(a, b));

  for (unsigned a = 0; a <= top; ++a) spec.axioms.insert(eq(a, a));
  spec.axioms.insert(eq(top, m));

  for (unsigned a = 0; a <= top; ++a) {
    for (unsigned b = 0; b <= top; ++b) {
      spec.rules.insert({{eq(a, b)}, {eq(a, b)}});
      spec.rules.insert({{eq(a, b)}, {eq(b, a)}});
      for (unsigned c = 0; c <= top; ++c)
        spec.rules.insert({{eq(a, b), eq(b, c)}, {eq(a, c)}});
      if (a < top && b < top) {
        spec.rules.insert({{eq(a, b)}, {eq(a + 1, b + 1)}});
        spec.rules.insert({{eq(a + 1, b + 1)}, {eq(a, b)}});
      }
    }
  }
  return DeductionSystem(std::move(spec));
}

SatValue saturating_op(ArithOp op, SatValue a, SatValue b, std::int64_t m) {
  __int128 x = a.value, y = b.value, exact = 0;
  switch (op) {
    case ArithOp::add: exact = x + y; break;
    case ArithOp::sub: exact = x - y; break;
    case ArithOp::mul: exact = x * y; break;
  }
  SatValue out{static_cast<std::int64_t>(exact), a.saturated || b.saturated};
  if (exact > m) {
    out = {m, true};
  } else if (exact < -m) {
    out = {-m, true};
  }
  return out;
}

Expr Expr::binary(ArithOp op, Expr lhs, Expr rhs) {
  return {std::make_shared<const Binary>(Binary{op, std::move(lhs), std::move(rhs)})};
}

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : s_(text) {}

  Expr parse() {
    Expr e = sum();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected character");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(0, "expression: " + what + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(std::string_view token) {
    skip_space();
    if (s_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  Expr sum() {
    Expr e = product();
    while (true) {
      if (eat("+")) {
        e = Expr::binary(ArithOp::add, std::move(e), product());
      } else if (eat("-")) {
        e = Expr::binary(ArithOp::sub, std::move(e), product());
      } else {
        return e;
      }
    }
  }

  Expr product() {
    Expr e = unary();
    while (eat("*") || eat("\xC3\x97")) e = Expr::binary(ArithOp::mul, std::move(e), unary());
    return e;
  }

  Expr unary() {
    if (eat("-")) {
      skip_space();
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        return Expr::literal(-number());
      return Expr::binary(ArithOp::sub, Expr::literal(0), unary());
    }
    if (eat("(")) {
      Expr e = sum();
      if (!eat(")")) fail("expected ')'");
      return e;
    }
    skip_space();
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      return Expr::literal(number());
    fail(pos_ < s_.size() ? "unexpected character" : "unexpected end of input");
  }

  std::int64_t number() {
    std::int64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > (INT64_MAX - 9) / 10) fail("literal too large");
      v = v * 10 + (s_[pos_++] - '0');
    }
    return v;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

char symbol(ArithOp op) {
  switch (op) {
    case ArithOp::add: return '+';
    case ArithOp::sub: return '-';
    case ArithOp::mul: return '*';
  }
  return '?';
}

struct Guard {
  std::int64_t m;
  bool safe = true;

  SatValue eval(const Expr& e) {
    if (const auto* lit = std::get_if<std::int64_t>(&e.node)) {
      if (*lit > m || *lit < -m)
        throw DomainError("literal " + std::to_string(*lit) + " outside [-M, M]");
      note(*lit);
      return {*lit, false};
    }
    const auto& bin = *std::get<std::shared_ptr<const Expr::Binary>>(e.node);
    SatValue lhs = eval(bin.lhs);
    SatValue rhs = eval(bin.rhs);
    SatValue out = saturating_op(bin.op, lhs, rhs, m);
    note(out.value);
    return out;
  }

  void note(std::int64_t v) {
    if (v >= m || v <= -m) safe = false;
  }
};

}  // namespace

Expr parse_expr(std::string_view text) { return ExprParser(text).parse(); }

std::string to_string(const Expr& e) {
  if (const auto* lit = std::get_if<std::int64_t>(&e.node)) return std::to_string(*lit);
  const auto& bin = *std::get<std::shared_ptr<const Expr::Binary>>(e.node);
  return "(" + to_string(bin.lhs) + symbol(bin.op) + to_string(bin.rhs) + ")";
}

GuardVerdict eval_guarded(const Expr& e, std::int64_t m) {
  if (m < 1) throw DomainError("machine infinity must be at least 1");
  Guard g{m};
  SatValue v = g.eval(e);
  return {v, g.safe};
}

}  // namespace incore
