#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "incore/closure.hpp"
#include "incore/system.hpp"

namespace incore {

/// Support levels (S_{n-1}, ..., S_0) for a sentence derived at depth n:
/// levels.front() fires the sentence, levels.back() is a set of axioms.
struct DerivationSequence {
  std::vector<FormulaSet> levels;

  std::size_t depth() const noexcept { return levels.size(); }
  /// S_{n-1} u ... u S_0, each formula once.
  FormulaSet support() const;

  friend auto operator<=>(const DerivationSequence&,
                          const DerivationSequence&) = default;
  friend bool operator==(const DerivationSequence&,
                         const DerivationSequence&) = default;
};

/// (minimal depth, minimal support length), ordered lexicographically.
struct Index {
  std::size_t depth = 0;
  std::size_t support_length = 0;

  friend auto operator<=>(const Index&, const Index&) = default;
  friend bool operator==(const Index&, const Index&) = default;
};

std::string to_string(const Index& i);

struct SequenceCheck {
  bool valid = false;
  std::vector<std::string> reasons;

  explicit operator bool() const noexcept { return valid; }
};

SequenceCheck verify_sequence(const DeductionSystem& sys,
                              const DerivationSequence& seq, const Formula& p);

struct DepthPolicy {
  enum class Kind { minimal_depth, all_depths };
  Kind kind = Kind::minimal_depth;
  std::size_t bound = 0;  // largest depth considered under all_depths

  static DepthPolicy minimal() { return {}; }
  static DepthPolicy up_to(std::size_t b) { return {Kind::all_depths, b}; }
};

inline constexpr std::size_t kDefaultBudget = 1'000'000;

struct SupportEnumeration {
  std::vector<DerivationSequence> sequences;  // canonical order
  bool complete = true;  // false: node budget ran out, results are partial
};

/// The sentence's minimal-length support and one sequence attaining it.
struct MinimalSupport {
  std::size_t length = 0;
  DerivationSequence witness;
};

/// Support search over one system, sharing a single closure trace of A.
/// Every call counts generated partial sequences against `budget`.
class DerivationAnalyzer {
 public:
  explicit DerivationAnalyzer(const DeductionSystem& sys,
                              std::size_t budget = kDefaultBudget);

  const DeductionSystem& system() const noexcept { return sys_; }
  const MaskTrace& trace() const noexcept { return trace_; }
  std::size_t budget() const noexcept { return budget_; }

  /// Throws NotDerivable when `p` is not in T(A).
  std::size_t depth(const Formula& p) const;
  /// Depths n <= bound with p in T_n(A), ascending.
  std::vector<std::size_t> depths_up_to(const Formula& p, std::size_t bound) const;
  /// Default bound for all-depth analyses: recorded prefix plus one period.
  std::size_t default_depth_bound() const { return trace_.distinct(); }

  SupportEnumeration enumerate(const Formula& p, DepthPolicy policy) const;

  /// Branch-and-bound over inclusion-minimal supports at depth `n`.
  /// Throws BudgetExceeded.
  MinimalSupport minimal_support(const Formula& p, std::size_t n) const;
  MinimalSupport minimal_support(const Formula& p, DepthPolicy policy) const;

  /// Throws AxiomHasNoIndex for depth-0 sentences.
  Index index(const Formula& p) const;

  /// First inclusion-minimal support at depth `n` whose axiom level
  /// satisfies `accept`, if any.
  std::optional<DerivationSequence> find_support(
      const Formula& p, std::size_t n,
      const std::function<bool(const Mask&)>& accept) const;

 private:
  const DeductionSystem& sys_;
  MaskTrace trace_;
  std::size_t budget_;
};

SupportEnumeration enumerate_supports(const DeductionSystem& sys, const Formula& p,
                                      DepthPolicy policy = DepthPolicy::minimal(),
                                      std::size_t budget = kDefaultBudget);
std::size_t min_support_length(const DeductionSystem& sys, const Formula& p,
                               DepthPolicy policy = DepthPolicy::minimal(),
                               std::size_t budget = kDefaultBudget);
Index index_of(const DeductionSystem& sys, const Formula& p,
               std::size_t budget = kDefaultBudget);

}  // namespace incore
