#include "incore/system.hpp"

#include "incore/errors.hpp"

namespace incore {

std::vector<std::string> validate_system(const SystemSpec& spec) {
  std::vector<std::string> out;
  if (spec.alphabet.symbols().empty()) out.push_back("alphabet is empty");
  if (spec.wffs.empty()) out.push_back("wffs is empty");

  for (const auto& w : spec.wffs) {
    auto pos = spec.alphabet.first_foreign(w.text());
    if (pos != std::string::npos && !spec.alphabet.symbols().empty())
      out.push_back("wff \"" + w.text() + "\" uses symbol '" + w.text()[pos] +
                    "' outside the alphabet");
  }
  for (const auto& a : spec.axioms)
    if (!spec.wffs.count(a))
      out.push_back("axiom not a declared wff: " + a.text());

  for (const auto& r : spec.rules) {
    if (r.conclusions.empty()) out.push_back("rule with no conclusions");
    for (const auto* side : {&r.premises, &r.conclusions})
      for (const auto& f : *side)
        if (!spec.wffs.count(f))
          out.push_back("rule formula not a declared wff: " + f.text());
  }
  return out;
}

DeductionSystem::DeductionSystem(SystemSpec spec) : spec_(std::move(spec)) {
  auto violations = validate_system(spec_);
  if (!violations.empty()) {
    std::string msg = "invalid system:";
    for (const auto& v : violations) msg += "\n  " + v;
    throw DomainError(msg);
  }

  formulas_.assign(spec_.wffs.begin(), spec_.wffs.end());
  for (std::size_t i = 0; i < formulas_.size(); ++i) {
    ids_.emplace(formulas_[i], i);
    lengths_.push_back(formulas_[i].length());
  }
  producers_.resize(formulas_.size());
  for (const auto& r : spec_.rules) {
    std::size_t idx = compiled_.size();
    compiled_.push_back({to_mask(r.premises), to_mask(r.conclusions)});
    for (const auto& c : r.conclusions) producers_[id_of(c)].push_back(idx);
  }
  axiom_mask_ = to_mask(spec_.axioms);
}

DeductionSystem DeductionSystem::with_axioms(FormulaSet axioms) const {
  SystemSpec s = spec_;
  s.axioms = std::move(axioms);
  return DeductionSystem(std::move(s));
}

std::size_t DeductionSystem::id_of(const Formula& f) const {
  auto it = ids_.find(f);
  if (it == ids_.end()) throw DomainError("not a well-formed formula: " + f.text());
  return it->second;
}

Mask DeductionSystem::full_mask() const {
  Mask m(size());
  m.set();
  return m;
}

Mask DeductionSystem::to_mask(const FormulaSet& s) const {
  Mask m(size());
  for (const auto& f : s) m.set(id_of(f));
  return m;
}

FormulaSet DeductionSystem::to_set(const Mask& m) const {
  FormulaSet out;
  for (auto i = m.find_first(); i != Mask::npos; i = m.find_next(i))
    out.insert(out.end(), formulas_[i]);
  return out;
}

std::size_t DeductionSystem::total_length(const Mask& m) const {
  std::size_t n = 0;
  for (auto i = m.find_first(); i != Mask::npos; i = m.find_next(i))
    n += lengths_[i];
  return n;
}

Mask DeductionSystem::apply(const Mask& s) const {
  Mask out(size());
  for (const auto& r : compiled_)
    if (r.premises.is_subset_of(s)) out |= r.conclusions;
  return out;
}

FormulaSet apply_deduction(const DeductionSystem& sys, const FormulaSet& s) {
  return sys.to_set(sys.apply(sys.to_mask(s)));
}

}  // namespace incore
