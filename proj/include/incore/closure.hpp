#pragma once

#include <cstddef>
#include <vector>

#include "incore/system.hpp"

namespace incore {

/// How the iteration T_{n+1} = D(T_n) stopped: states[start] recurs as
/// states[start + period]. A fixpoint is a cycle of period 1.
struct Termination {
  enum class Kind { fixpoint, cycle };
  Kind kind = Kind::fixpoint;
  std::size_t start = 0;
  std::size_t period = 1;

  friend bool operator==(const Termination&, const Termination&) = default;
};

/// Mask-level iteration. `states` holds T_0 .. T_{start + period}; the last
/// entry repeats states[start].
struct MaskTrace {
  std::vector<Mask> states;
  Termination termination;
  Mask union_mask;

  /// T_n for any n, following the cycle past the recorded prefix.
  const Mask& state_at(std::size_t n) const;
  /// Number of distinct states (prefix plus one period).
  std::size_t distinct() const { return states.size() - 1; }
};

MaskTrace trace_masks(const DeductionSystem& sys, const Mask& base);
Mask theory_mask(const DeductionSystem& sys, const Mask& base);

struct ClosureTrace {
  std::vector<FormulaSet> states;
  Termination termination;
  FormulaSet union_set;
};

/// Iterates from T_0 = base until a state repeats.
ClosureTrace closure_trace(const DeductionSystem& sys, const FormulaSet& base);
FormulaSet theory_of(const DeductionSystem& sys, const FormulaSet& base);
/// True iff the theory of `base` is all of W.
bool is_inconsistent(const DeductionSystem& sys, const FormulaSet& base);
bool is_inconsistent(const DeductionSystem& sys);

/// Smallest n with `p` in T_n(A). Throws NotDerivable or DomainError.
std::size_t depth_of(const DeductionSystem& sys, const Formula& p);
std::size_t depth_of(const MaskTrace& trace, std::size_t id);

}  // namespace incore
