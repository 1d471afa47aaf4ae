#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "incore/derivation.hpp"
#include "incore/system.hpp"

namespace incore {

/// Whether a derivable sentence lies in the consistent core C_A: some axiom
/// subset B derives it while T(B) stays a proper subset of W.
struct CoreVerdict {
  enum class Status { core, non_core };

  Formula sentence;
  Status status = Status::non_core;
  std::optional<FormulaSet> witness;  // present iff core
  bool via_theorem = false;           // index strictly below kappa

  bool is_core() const noexcept { return status == Status::core; }
};

/// Lexicographically least index among non-core sentences of depth >= 1.
/// An empty value compares above every index.
struct KappaResult {
  std::optional<Index> value;
  std::optional<Formula> witness;
};

/// True when `i` lies strictly below kappa (always, when kappa is none).
bool below_kappa(const Index& i, const KappaResult& kappa);

struct ClassifiedSentence {
  Formula sentence;
  std::size_t depth = 0;
  std::optional<Index> index;  // none for depth-0 sentences
  CoreVerdict verdict;
};

struct Classification {
  bool inconsistent = false;
  KappaResult kappa;
  std::vector<ClassifiedSentence> sentences;  // every P in T(A), canonical order
  FormulaSet non_core_axioms;
};

struct IndexComparison {
  Formula sentence;
  std::optional<Index> first;  // none: axiom under that axiomatization
  std::optional<Index> second;
};

struct EquivalenceReport {
  bool equivalent = false;
  FormulaSet theory_first;
  FormulaSet theory_second;
  std::vector<IndexComparison> rows;  // filled only when equivalent
  KappaResult kappa_first;
  KappaResult kappa_second;
};

/// Core analysis over one system. Theories of axiom subsets are cached, so
/// reuse one analyzer for many sentences.
class CoreAnalyzer {
 public:
  explicit CoreAnalyzer(const DeductionSystem& sys,
                        std::size_t budget = kDefaultBudget);

  const DeductionSystem& system() const noexcept { return sys_; }
  const DerivationAnalyzer& derivations() const noexcept { return deriv_; }
  bool inconsistent() const noexcept { return inconsistent_; }
  FormulaSet theory() const { return sys_.to_set(deriv_.trace().union_mask); }

  /// Throws NotDerivable when `p` is not in T(A).
  CoreVerdict membership(const Formula& p);
  /// The reading restricted to supports at the sentence's minimal depth:
  /// some such support has an axiom level with a proper theory. Depth-0
  /// sentences have no such support and fall back to membership().
  bool core_at_minimal_depth(const Formula& p);

  std::vector<CoreVerdict> consistent_core();
  KappaResult kappa();
  Index kappa_upper_bound(const Formula& p);
  /// Throws SoundnessFailure if a sentence below kappa is not core.
  Classification classify();

 private:
  const Mask& theory_of_subset(const Mask& b);

  const DeductionSystem& sys_;
  DerivationAnalyzer deriv_;
  bool inconsistent_;
  std::vector<std::size_t> axiom_ids_;
  std::map<Mask, Mask> theories_;
  std::optional<KappaResult> kappa_;
};

CoreVerdict core_membership(const DeductionSystem& sys, const Formula& p);
std::vector<CoreVerdict> consistent_core(const DeductionSystem& sys);
KappaResult kappa(const DeductionSystem& sys, std::size_t budget = kDefaultBudget);
Index kappa_upper_bound(const DeductionSystem& sys, const Formula& p,
                        std::size_t budget = kDefaultBudget);
Classification classify(const DeductionSystem& sys,
                        std::size_t budget = kDefaultBudget);

/// Systems must share alphabet, wffs and rules; throws DomainError otherwise.
EquivalenceReport compare_axiomatizations(const DeductionSystem& first,
                                          const DeductionSystem& second,
                                          std::size_t budget = kDefaultBudget);

}  // namespace incore
