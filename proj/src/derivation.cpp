#include "incore/derivation.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <utility>

#include "incore/errors.hpp"

namespace incore {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Drops duplicates and strict supersets, leaving an antichain.
std::vector<Mask> minimal_sets(std::vector<Mask> sets) {
  std::sort(sets.begin(), sets.end(), [](const Mask& a, const Mask& b) {
    auto ca = a.count(), cb = b.count();
    return ca != cb ? ca < cb : a < b;
  });
  std::vector<Mask> kept;
  for (auto& s : sets) {
    bool dominated = std::any_of(kept.begin(), kept.end(),
                                 [&](const Mask& k) { return k.is_subset_of(s); });
    if (!dominated) kept.push_back(std::move(s));
  }
  return kept;
}

struct BudgetHit {};

class Search {
 public:
  Search(const DeductionSystem& sys, const MaskTrace& trace, std::size_t budget)
      : sys_(sys), trace_(trace), budget_(budget) {}

  void tick() {
    if (++nodes_ > budget_) throw BudgetExceeded(budget_);
  }

  const Mask& level(std::size_t k) const { return trace_.state_at(k); }

  // Minimal premise sets, inside `allowed`, of rules concluding `q`.
  std::vector<Mask> options(std::size_t q, const Mask& allowed) const {
    std::vector<Mask> out;
    for (auto r : sys_.producers(q)) {
      const auto& prem = sys_.compiled_rules()[r].premises;
      if (prem.is_subset_of(allowed)) out.push_back(prem);
    }
    return minimal_sets(std::move(out));
  }

  // Inclusion-minimal X within `allowed` with target in D(X). Candidates
  // whose union with `acc` already costs `bound` or more are dropped.
  std::vector<Mask> covers(const Mask& target, const Mask& allowed,
                           const Mask& acc, std::size_t bound) {
    std::vector<std::pair<std::size_t, std::vector<Mask>>> needs;
    for (auto q = target.find_first(); q != Mask::npos; q = target.find_next(q)) {
      auto opts = options(q, allowed);
      if (opts.empty()) return {};
      needs.emplace_back(q, std::move(opts));
    }
    std::stable_sort(needs.begin(), needs.end(), [](const auto& a, const auto& b) {
      return a.second.size() < b.second.size();
    });

    std::vector<Mask> partial{sys_.empty_mask()};
    for (const auto& [q, opts] : needs) {
      std::vector<Mask> next;
      for (const auto& p : partial) {
        if (sys_.apply(p).test(q)) {
          next.push_back(p);
          continue;
        }
        for (const auto& o : opts) {
          Mask grown = p | o;
          tick();
          if (bound != kNone && sys_.total_length(acc | grown) >= bound) continue;
          next.push_back(std::move(grown));
        }
      }
      partial = minimal_sets(std::move(next));
      if (partial.empty()) break;
    }
    return partial;
  }

  struct Best {
    std::size_t cost = kNone;
    std::vector<Mask> chain;
  };

  void minimize(std::size_t k, const Mask& sk, const Mask& acc,
                std::vector<Mask>& chain, Best& best) {
    if (k == 0) {
      auto cost = sys_.total_length(acc);
      if (cost < best.cost) best = {cost, chain};
      return;
    }
    auto cands = covers(sk, level(k - 1), acc, best.cost);
    std::vector<std::pair<std::size_t, Mask>> ranked;
    for (auto& x : cands) ranked.emplace_back(sys_.total_length(acc | x), std::move(x));
    std::sort(ranked.begin(), ranked.end());
    for (const auto& [cost, x] : ranked) {
      if (cost >= best.cost) break;
      chain.push_back(x);
      minimize(k - 1, x, acc | x, chain, best);
      chain.pop_back();
    }
  }

  bool find_any(std::size_t k, const Mask& sk, std::vector<Mask>& chain,
                const std::function<bool(const Mask&)>& accept,
                std::set<std::pair<std::size_t, Mask>>& visited) {
    if (k == 0) return accept(sk);
    if (!visited.emplace(k, sk).second) return false;
    for (const auto& x : covers(sk, level(k - 1), sys_.empty_mask(), kNone)) {
      chain.push_back(x);
      if (find_any(k - 1, x, chain, accept, visited)) return true;
      chain.pop_back();
    }
    return false;
  }

  // Every X within `allowed` with target in D(X), branching on members and
  // pruning branches whose largest completion no longer covers the target.
  template <class Visit>
  void all_covers(const Mask& target, const Mask& allowed, Visit&& visit) {
    std::vector<std::size_t> ids;
    for (auto i = allowed.find_first(); i != Mask::npos; i = allowed.find_next(i))
      ids.push_back(i);
    if (!target.is_subset_of(sys_.apply(allowed))) return;
    Mask in = sys_.empty_mask();
    branch(ids, 0, in, allowed, target, visit);
  }

  template <class Visit>
  void branch(const std::vector<std::size_t>& ids, std::size_t pos, Mask& in,
              Mask rest, const Mask& target, Visit& visit) {
    if (pos == ids.size()) {
      visit(in);
      return;
    }
    auto id = ids[pos];
    rest.reset(id);
    in.set(id);
    branch(ids, pos + 1, in, rest, target, visit);
    in.reset(id);
    if (target.is_subset_of(sys_.apply(in | rest)))
      branch(ids, pos + 1, in, rest, target, visit);
  }

  void enumerate(std::size_t k, const Mask& sk, std::vector<Mask>& chain,
                 std::vector<std::vector<Mask>>& out) {
    if (k == 0) {
      out.push_back(chain);
      return;
    }
    all_covers(sk, level(k - 1), [&](const Mask& x) {
      if (++nodes_ > budget_) throw BudgetHit{};
      chain.push_back(x);
      enumerate(k - 1, x, chain, out);
      chain.pop_back();
    });
  }

 private:
  const DeductionSystem& sys_;
  const MaskTrace& trace_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
};

DerivationSequence to_sequence(const DeductionSystem& sys,
                               const std::vector<Mask>& chain) {
  DerivationSequence seq;
  for (const auto& m : chain) seq.levels.push_back(sys.to_set(m));
  return seq;
}

Mask singleton(const DeductionSystem& sys, std::size_t id) {
  Mask m = sys.empty_mask();
  m.set(id);
  return m;
}

}  // namespace

FormulaSet DerivationSequence::support() const {
  FormulaSet out;
  for (const auto& l : levels) out.insert(l.begin(), l.end());
  return out;
}

std::string to_string(const Index& i) {
  return "(" + std::to_string(i.depth) + "," + std::to_string(i.support_length) + ")";
}

SequenceCheck verify_sequence(const DeductionSystem& sys,
                              const DerivationSequence& seq, const Formula& p) {
  SequenceCheck check;
  auto& why = check.reasons;
  if (!sys.contains(p)) why.push_back("sentence not a wff: " + p.text());
  if (seq.levels.empty()) why.push_back("sequence has no levels");
  for (const auto& level : seq.levels)
    for (const auto& f : level)
      if (!sys.contains(f)) why.push_back("level formula not a wff: " + f.text());
  if (!why.empty()) return check;

  auto trace = trace_masks(sys, sys.axiom_mask());
  const std::size_t n = seq.depth();
  std::vector<Mask> masks;  // masks[k] = S_k
  for (std::size_t k = 0; k < n; ++k) masks.push_back(sys.to_mask(seq.levels[n - 1 - k]));

  if (!sys.apply(masks[n - 1]).test(sys.id_of(p)))
    why.push_back(p.text() + " not in D(S_" + std::to_string(n - 1) + ")");
  for (std::size_t k = n - 1; k >= 1; --k)
    if (!masks[k].is_subset_of(sys.apply(masks[k - 1])))
      why.push_back("S_" + std::to_string(k) + " not within D(S_" +
                    std::to_string(k - 1) + ")");
  for (std::size_t k = 0; k < n; ++k)
    if (!masks[k].is_subset_of(trace.state_at(k)))
      why.push_back("S_" + std::to_string(k) + " not within T_" + std::to_string(k));
  if (!masks[0].is_subset_of(sys.axiom_mask())) why.push_back("S_0 not within the axioms");

  check.valid = why.empty();
  return check;
}

DerivationAnalyzer::DerivationAnalyzer(const DeductionSystem& sys, std::size_t budget)
    : sys_(sys), trace_(trace_masks(sys, sys.axiom_mask())), budget_(budget) {}

std::size_t DerivationAnalyzer::depth(const Formula& p) const {
  auto n = depth_of(trace_, sys_.id_of(p));
  if (n == kNone) throw NotDerivable(p.text());
  return n;
}

std::vector<std::size_t> DerivationAnalyzer::depths_up_to(const Formula& p,
                                                          std::size_t bound) const {
  auto id = sys_.id_of(p);
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= bound; ++n)
    if (trace_.state_at(n).test(id)) out.push_back(n);
  return out;
}

SupportEnumeration DerivationAnalyzer::enumerate(const Formula& p,
                                                 DepthPolicy policy) const {
  auto first = depth(p);
  std::vector<std::size_t> depths;
  if (policy.kind == DepthPolicy::Kind::minimal_depth) {
    depths.push_back(first);
  } else {
    depths = depths_up_to(p, policy.bound);
  }

  SupportEnumeration result;
  std::vector<std::vector<Mask>> chains;
  Search search(sys_, trace_, budget_);
  auto id = sys_.id_of(p);
  try {
    for (auto n : depths) {
      if (n == 0) continue;
      std::vector<Mask> chain;
      search.enumerate(n, singleton(sys_, id), chain, chains);
    }
  } catch (const BudgetHit&) {
    result.complete = false;
  }
  for (const auto& c : chains) result.sequences.push_back(to_sequence(sys_, c));
  std::sort(result.sequences.begin(), result.sequences.end());
  return result;
}

MinimalSupport DerivationAnalyzer::minimal_support(const Formula& p,
                                                   std::size_t n) const {
  auto id = sys_.id_of(p);
  if (n == 0) throw AxiomHasNoIndex(p.text());
  if (!trace_.state_at(n).test(id))
    throw NotDerivable(p.text() + " at depth " + std::to_string(n));
  Search search(sys_, trace_, budget_);
  Search::Best best;
  std::vector<Mask> chain;
  search.minimize(n, singleton(sys_, id), sys_.empty_mask(), chain, best);
  // A support always exists at a depth where the sentence is present.
  return {best.cost, to_sequence(sys_, best.chain)};
}

MinimalSupport DerivationAnalyzer::minimal_support(const Formula& p,
                                                   DepthPolicy policy) const {
  auto first = depth(p);
  if (policy.kind == DepthPolicy::Kind::minimal_depth) return minimal_support(p, first);
  std::optional<MinimalSupport> best;
  for (auto n : depths_up_to(p, policy.bound)) {
    if (n == 0) continue;
    auto candidate = minimal_support(p, n);
    if (!best || candidate.length < best->length) best = std::move(candidate);
  }
  if (!best) throw AxiomHasNoIndex(p.text());
  return *best;
}

Index DerivationAnalyzer::index(const Formula& p) const {
  auto n = depth(p);
  if (n == 0) throw AxiomHasNoIndex(p.text());
  return {n, minimal_support(p, n).length};
}

std::optional<DerivationSequence> DerivationAnalyzer::find_support(
    const Formula& p, std::size_t n,
    const std::function<bool(const Mask&)>& accept) const {
  auto id = sys_.id_of(p);
  if (n == 0 || !trace_.state_at(n).test(id)) return std::nullopt;
  Search search(sys_, trace_, budget_);
  std::vector<Mask> chain;
  std::set<std::pair<std::size_t, Mask>> visited;
  if (search.find_any(n, singleton(sys_, id), chain, accept, visited))
    return to_sequence(sys_, chain);
  return std::nullopt;
}

SupportEnumeration enumerate_supports(const DeductionSystem& sys, const Formula& p,
                                      DepthPolicy policy, std::size_t budget) {
  return DerivationAnalyzer(sys, budget).enumerate(p, policy);
}

std::size_t min_support_length(const DeductionSystem& sys, const Formula& p,
                               DepthPolicy policy, std::size_t budget) {
  return DerivationAnalyzer(sys, budget).minimal_support(p, policy).length;
}

Index index_of(const DeductionSystem& sys, const Formula& p, std::size_t budget) {
  return DerivationAnalyzer(sys, budget).index(p);
}

}  // namespace incore
