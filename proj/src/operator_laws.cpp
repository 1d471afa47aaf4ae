#include "incore/operator_laws.hpp"

#include <algorithm>
#include <random>

namespace incore {

namespace {

constexpr std::size_t kExhaustiveLimit = 6;
constexpr std::size_t kMaxCounterexamples = 5;

class Sampler {
 public:
  Sampler(std::size_t universe, std::uint64_t seed) : n_(universe), rng_(seed) {}

  std::size_t below(std::size_t bound) { return bound == 0 ? 0 : rng_() % bound; }

  Mask subset() {
    Mask m(n_);
    for (std::size_t i = 0; i < n_; ++i)
      if (rng_() & 1u) m.set(i);
    return m;
  }

  Mask subset_of(const Mask& outer) {
    Mask m = outer;
    for (auto i = m.find_first(); i != Mask::npos; i = m.find_next(i))
      if (rng_() & 1u) m.reset(i);
    return m;
  }

  Mask superset_of(const Mask& inner) {
    Mask m = inner;
    for (std::size_t i = 0; i < n_; ++i)
      if (!m.test(i) && (rng_() & 1u)) m.set(i);
    return m;
  }

 private:
  std::size_t n_;
  std::mt19937_64 rng_;
};

class LawChecker {
 public:
  LawChecker(const DeductionSystem& sys, const DeductionOperator& op)
      : sys_(sys), op_(op) {}

  void record(LawResult& r, bool ok, const std::string& what) {
    ++r.checks;
    if (ok) return;
    ++r.violations;
    if (r.counterexamples.size() < kMaxCounterexamples)
      r.counterexamples.push_back(what);
  }

  std::string show(const Mask& m) const { return to_string(sys_.to_set(m)); }

  void finitely_generated(LawResult& r, Sampler& rng) {
    Mask s = rng.subset();
    Mask image = op_(s);
    Mask joined(sys_.size());
    std::vector<std::size_t> members;
    for (auto i = s.find_first(); i != Mask::npos; i = s.find_next(i))
      members.push_back(i);

    bool contained = true;
    if (members.size() <= kExhaustiveLimit) {
      for (std::size_t bits = 0; bits < (std::size_t{1} << members.size()); ++bits) {
        Mask f(sys_.size());
        for (std::size_t k = 0; k < members.size(); ++k)
          if (bits >> k & 1u) f.set(members[k]);
        joined |= op_(f);
      }
    } else {
      for (std::size_t k = 0; k < 2 * members.size(); ++k) {
        Mask part = op_(rng.subset_of(s));
        contained = contained && part.is_subset_of(image);
        joined |= part;
      }
      joined |= image;  // F = S itself is a finite subset
    }
    record(r, contained && joined == image,
           "S=" + show(s) + " D(S)=" + show(image) + " union D(F)=" + show(joined));
  }

  void monotone(LawResult& r, Sampler& rng) {
    Mask big = rng.subset();
    Mask small = rng.subset_of(big);
    Mask a = op_(small), b = op_(big);
    record(r, a.is_subset_of(b),
           "S=" + show(small) + " S'=" + show(big) + " D(S)=" + show(a) +
               " D(S')=" + show(b));
  }

  void union_law(LawResult& r, Sampler& rng) {
    std::size_t k = 2 + rng.below(3);
    Mask joined_images(sys_.size()), joined_sets(sys_.size());
    std::string family;
    for (std::size_t i = 0; i < k; ++i) {
      Mask s = rng.subset();
      joined_images |= op_(s);
      joined_sets |= s;
      family += show(s);
    }
    Mask image = op_(joined_sets);
    record(r, joined_images.is_subset_of(image),
           "family " + family + " union D(S_i)=" + show(joined_images) +
               " D(union)=" + show(image));
  }

  // Alternates between inclusion chains and finite directed families of the
  // form {X, Y, X u Y, ...}; both have their union as a member.
  void directed_union(LawResult& r, Sampler& rng, std::size_t round) {
    std::vector<Mask> family;
    if (round % 2 == 0) {
      family.push_back(rng.subset_of(rng.subset()));
      std::size_t k = 1 + rng.below(4);
      for (std::size_t i = 0; i < k; ++i)
        family.push_back(rng.superset_of(family.back()));
    } else {
      Mask x = rng.subset(), y = rng.subset();
      family = {x, y, x | y};
    }
    Mask joined_images(sys_.size()), joined_sets(sys_.size());
    std::string shown;
    for (const auto& s : family) {
      joined_images |= op_(s);
      joined_sets |= s;
      shown += show(s);
    }
    Mask image = op_(joined_sets);
    record(r, joined_images == image,
           "family " + shown + " union D(S_i)=" + show(joined_images) +
               " D(union)=" + show(image));
  }

 private:
  const DeductionSystem& sys_;
  const DeductionOperator& op_;
};

}  // namespace

bool LawReport::passed() const {
  return std::all_of(laws.begin(), laws.end(),
                     [](const LawResult& r) { return r.passed(); });
}

LawReport check_operator_laws(const DeductionSystem& sys, std::size_t samples,
                              std::uint64_t seed) {
  DeductionOperator op = [&sys](const Mask& s) { return sys.apply(s); };
  return check_operator_laws(sys, op, samples, seed);
}

LawReport check_operator_laws(const DeductionSystem& sys,
                              const DeductionOperator& op, std::size_t samples,
                              std::uint64_t seed) {
  LawReport report;
  report.seed = seed;
  report.samples = samples;
  for (const char* name : {"finitely-generated", "monotone", "union", "directed-union"}) {
    LawResult r;
    r.law = name;
    report.laws.push_back(r);
  }

  Sampler rng(sys.size(), seed);
  LawChecker checker(sys, op);
  for (std::size_t i = 0; i < samples; ++i) {
    checker.finitely_generated(report.laws[0], rng);
    checker.monotone(report.laws[1], rng);
    checker.union_law(report.laws[2], rng);
    checker.directed_union(report.laws[3], rng, i);
  }
  return report;
}

}  // namespace incore
