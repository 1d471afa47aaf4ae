#pragma once

#include <boost/dynamic_bitset.hpp>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "incore/formula.hpp"

namespace incore {

/// Membership mask over the formulas of one system, indexed by canonical id.
using Mask = boost::dynamic_bitset<std::uint64_t>;

/// Ground inference step: when every premise is present, all conclusions
/// are produced. Empty premises fire unconditionally.
struct RuleInstance {
  FormulaSet premises;
  FormulaSet conclusions;

  friend auto operator<=>(const RuleInstance&, const RuleInstance&) = default;
  friend bool operator==(const RuleInstance&, const RuleInstance&) = default;
};

/// Unvalidated description of a deduction system, as read from text.
struct SystemSpec {
  Alphabet alphabet;
  FormulaSet wffs;
  std::set<RuleInstance> rules;
  FormulaSet axioms;

  friend bool operator==(const SystemSpec&, const SystemSpec&) = default;
};

/// Every invariant violation of `spec`; empty means valid.
std::vector<std::string> validate_system(const SystemSpec& spec);

/// A validated system with its rules compiled to masks. Immutable.
class DeductionSystem {
 public:
  struct CompiledRule {
    Mask premises;
    Mask conclusions;
  };

  /// Throws DomainError listing the violations when `spec` is invalid.
  explicit DeductionSystem(SystemSpec spec);

  const SystemSpec& spec() const noexcept { return spec_; }
  const Alphabet& alphabet() const noexcept { return spec_.alphabet; }
  const FormulaSet& wffs() const noexcept { return spec_.wffs; }
  const std::set<RuleInstance>& rules() const noexcept { return spec_.rules; }
  const FormulaSet& axioms() const noexcept { return spec_.axioms; }

  /// Same language and rules, different axioms.
  DeductionSystem with_axioms(FormulaSet axioms) const;

  std::size_t size() const noexcept { return formulas_.size(); }
  const Formula& formula(std::size_t id) const { return formulas_[id]; }
  std::size_t length_of(std::size_t id) const { return lengths_[id]; }
  bool contains(const Formula& f) const { return ids_.count(f) != 0; }
  /// Throws DomainError when `f` is not a well-formed formula of the system.
  std::size_t id_of(const Formula& f) const;

  Mask empty_mask() const { return Mask(size()); }
  Mask full_mask() const;
  const Mask& axiom_mask() const noexcept { return axiom_mask_; }
  Mask to_mask(const FormulaSet& s) const;
  FormulaSet to_set(const Mask& m) const;
  std::size_t total_length(const Mask& m) const;

  /// One deduction step on a mask.
  Mask apply(const Mask& s) const;
  const std::vector<CompiledRule>& compiled_rules() const noexcept {
    return compiled_;
  }
  /// Indices into compiled_rules() of the rules concluding formula `id`.
  const std::vector<std::size_t>& producers(std::size_t id) const {
    return producers_[id];
  }

  friend bool operator==(const DeductionSystem& a, const DeductionSystem& b) {
    return a.spec_ == b.spec_;
  }

 private:
  SystemSpec spec_;
  std::vector<Formula> formulas_;
  std::vector<std::size_t> lengths_;
  std::map<Formula, std::size_t> ids_;
  std::vector<CompiledRule> compiled_;
  std::vector<std::vector<std::size_t>> producers_;
  Mask axiom_mask_;
};

/// D(S): conclusions of every rule whose premises lie in `s`.
/// Throws DomainError when `s` is not a subset of W.
FormulaSet apply_deduction(const DeductionSystem& sys, const FormulaSet& s);

}  // namespace incore
