#include "incore/core.hpp"

#include "incore/closure.hpp"
#include "incore/errors.hpp"

namespace incore {

bool below_kappa(const Index& i, const KappaResult& kappa) {
  return !kappa.value || i < *kappa.value;
}

CoreAnalyzer::CoreAnalyzer(const DeductionSystem& sys, std::size_t budget)
    : sys_(sys), deriv_(sys, budget), inconsistent_(deriv_.trace().union_mask.all()) {
  const auto& a = sys.axiom_mask();
  for (auto i = a.find_first(); i != Mask::npos; i = a.find_next(i))
    axiom_ids_.push_back(i);
}

const Mask& CoreAnalyzer::theory_of_subset(const Mask& b) {
  auto it = theories_.find(b);
  if (it == theories_.end()) it = theories_.emplace(b, theory_mask(sys_, b)).first;
  return it->second;
}

CoreVerdict CoreAnalyzer::membership(const Formula& p) {
  auto id = sys_.id_of(p);
  if (!deriv_.trace().union_mask.test(id)) throw NotDerivable(p.text());

  CoreVerdict v;
  v.sentence = p;
  if (!inconsistent_) {
    v.status = CoreVerdict::Status::core;
    v.witness = sys_.axioms();
    return v;
  }

  // Subsets of A by size, each size in lexicographic order of axiom ids.
  const std::size_t k = axiom_ids_.size();
  for (std::size_t size = 0; size <= k; ++size) {
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      Mask b = sys_.empty_mask();
      for (auto i : pick) b.set(axiom_ids_[i]);
      const Mask& t = theory_of_subset(b);
      if (t.test(id) && !t.all()) {
        v.status = CoreVerdict::Status::core;
        v.witness = sys_.to_set(b);
        return v;
      }
      std::size_t j = size;
      while (j > 0 && pick[j - 1] == k - size + j - 1) --j;
      if (j == 0) break;
      ++pick[j - 1];
      for (std::size_t i = j; i < size; ++i) pick[i] = pick[i - 1] + 1;
    }
  }
  return v;
}

bool CoreAnalyzer::core_at_minimal_depth(const Formula& p) {
  auto n = deriv_.depth(p);
  if (n == 0) return membership(p).is_core();
  auto found = deriv_.find_support(p, n, [this](const Mask& s0) {
    return !theory_of_subset(s0).all();
  });
  return found.has_value();
}

std::vector<CoreVerdict> CoreAnalyzer::consistent_core() {
  std::vector<CoreVerdict> out;
  for (const auto& p : theory()) out.push_back(membership(p));
  return out;
}

KappaResult CoreAnalyzer::kappa() {
  if (kappa_) return *kappa_;
  KappaResult best;
  for (const auto& p : theory()) {
    if (deriv_.depth(p) == 0 || membership(p).is_core()) continue;
    auto idx = deriv_.index(p);
    if (!best.value || idx < *best.value) best = {idx, p};
  }
  kappa_ = best;
  return best;
}

Index CoreAnalyzer::kappa_upper_bound(const Formula& p) {
  if (membership(p).is_core())
    throw InvalidWitness("not a valid kappa witness (core sentence): " + p.text());
  return deriv_.index(p);
}

Classification CoreAnalyzer::classify() {
  Classification c;
  c.inconsistent = inconsistent_;
  c.kappa = kappa();
  for (const auto& p : theory()) {
    ClassifiedSentence row{p, deriv_.depth(p), std::nullopt, membership(p)};
    if (row.depth > 0) {
      row.index = deriv_.index(p);
      row.verdict.via_theorem = below_kappa(*row.index, c.kappa);
      if (row.verdict.via_theorem && !row.verdict.is_core())
        throw SoundnessFailure("sentence " + p.text() + " with index " +
                               to_string(*row.index) +
                               " lies below kappa but is not core");
    } else if (!row.verdict.is_core()) {
      c.non_core_axioms.insert(p);
    }
    c.sentences.push_back(std::move(row));
  }
  return c;
}

CoreVerdict core_membership(const DeductionSystem& sys, const Formula& p) {
  return CoreAnalyzer(sys).membership(p);
}

std::vector<CoreVerdict> consistent_core(const DeductionSystem& sys) {
  return CoreAnalyzer(sys).consistent_core();
}

KappaResult kappa(const DeductionSystem& sys, std::size_t budget) {
  return CoreAnalyzer(sys, budget).kappa();
}

Index kappa_upper_bound(const DeductionSystem& sys, const Formula& p,
                        std::size_t budget) {
  return CoreAnalyzer(sys, budget).kappa_upper_bound(p);
}

Classification classify(const DeductionSystem& sys, std::size_t budget) {
  return CoreAnalyzer(sys, budget).classify();
}

EquivalenceReport compare_axiomatizations(const DeductionSystem& first,
                                          const DeductionSystem& second,
                                          std::size_t budget) {
  if (first.alphabet() != second.alphabet())
    throw DomainError("axiomatizations differ in alphabet");
  if (first.wffs() != second.wffs())
    throw DomainError("axiomatizations differ in well-formed formulas");
  if (first.rules() != second.rules())
    throw DomainError("axiomatizations differ in rules");

  CoreAnalyzer a(first, budget), b(second, budget);
  EquivalenceReport r;
  r.theory_first = a.theory();
  r.theory_second = b.theory();
  r.equivalent = r.theory_first == r.theory_second;
  if (!r.equivalent) return r;

  auto index_or_axiom = [](const DerivationAnalyzer& d, const Formula& p) {
    return d.depth(p) == 0 ? std::optional<Index>{} : d.index(p);
  };
  for (const auto& p : r.theory_first)
    r.rows.push_back({p, index_or_axiom(a.derivations(), p),
                      index_or_axiom(b.derivations(), p)});
  r.kappa_first = a.kappa();
  r.kappa_second = b.kappa();
  return r;
}

}  // namespace incore
