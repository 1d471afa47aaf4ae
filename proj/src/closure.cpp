#include "incore/closure.hpp"

#include <map>

#include "incore/errors.hpp"

namespace incore {

const Mask& MaskTrace::state_at(std::size_t n) const {
  const auto& t = termination;
  if (n < t.start + t.period) return states[n];
  return states[t.start + (n - t.start) % t.period];
}

MaskTrace trace_masks(const DeductionSystem& sys, const Mask& base) {
  MaskTrace trace;
  std::map<Mask, std::size_t> seen;
  Mask current = base;
  trace.union_mask = Mask(sys.size());
  for (std::size_t step = 0;; ++step) {
    trace.states.push_back(current);
    auto [it, fresh] = seen.emplace(current, step);
    if (!fresh) {
      std::size_t period = step - it->second;
      trace.termination = {period == 1 ? Termination::Kind::fixpoint
                                       : Termination::Kind::cycle,
                           it->second, period};
      return trace;
    }
    trace.union_mask |= current;
    current = sys.apply(current);
  }
}

Mask theory_mask(const DeductionSystem& sys, const Mask& base) {
  return trace_masks(sys, base).union_mask;
}

ClosureTrace closure_trace(const DeductionSystem& sys, const FormulaSet& base) {
  auto masks = trace_masks(sys, sys.to_mask(base));
  ClosureTrace out;
  for (const auto& m : masks.states) out.states.push_back(sys.to_set(m));
  out.termination = masks.termination;
  out.union_set = sys.to_set(masks.union_mask);
  return out;
}

FormulaSet theory_of(const DeductionSystem& sys, const FormulaSet& base) {
  return sys.to_set(theory_mask(sys, sys.to_mask(base)));
}

bool is_inconsistent(const DeductionSystem& sys, const FormulaSet& base) {
  return theory_mask(sys, sys.to_mask(base)).all();
}

bool is_inconsistent(const DeductionSystem& sys) {
  return theory_mask(sys, sys.axiom_mask()).all();
}

std::size_t depth_of(const MaskTrace& trace, std::size_t id) {
  for (std::size_t n = 0; n < trace.distinct(); ++n)
    if (trace.states[n].test(id)) return n;
  return static_cast<std::size_t>(-1);
}

std::size_t depth_of(const DeductionSystem& sys, const Formula& p) {
  auto id = sys.id_of(p);
  auto trace = trace_masks(sys, sys.axiom_mask());
  auto n = depth_of(trace, id);
  if (n == static_cast<std::size_t>(-1)) throw NotDerivable(p.text());
  return n;
}

}  // namespace incore
