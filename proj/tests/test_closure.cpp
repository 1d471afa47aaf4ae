#include <doctest.h>

#include "incore/closure.hpp"
#include "incore/errors.hpp"
#include "incore/operator_laws.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random_systems.hpp"

using namespace incore;
using testing_support::ex1;
using testing_support::F;

TEST_CASE("closure trace of the reference system") {
  auto sys = ex1();
  auto all = make_set({"p", "q", "r", "s", "t"});

  auto t = closure_trace(sys, sys.axioms());
  REQUIRE(t.states.size() == 4);
  CHECK(t.states[0] == make_set({"p", "s"}));
  CHECK(t.states[1] == make_set({"q", "t"}));
  CHECK(t.states[2] == all);
  CHECK(t.states[3] == all);
  CHECK(t.termination == Termination{Termination::Kind::fixpoint, 2, 1});
  CHECK(t.union_set == all);

  auto from_p = closure_trace(sys, make_set({"p"}));
  REQUIRE(from_p.states.size() == 4);
  CHECK(from_p.states[1] == make_set({"q"}));
  CHECK(from_p.states[2].empty());
  CHECK(from_p.states[3].empty());
  CHECK(from_p.union_set == make_set({"p", "q"}));
}

TEST_CASE("rule-free system reaches the empty fixpoint at step 1") {
  auto sys = parse_system("alphabet p q\nwffs p q\naxiom p\n");
  auto t = closure_trace(sys, make_set({"p"}));
  REQUIRE(t.states.size() == 3);
  CHECK(t.states[0] == make_set({"p"}));
  CHECK(t.states[1].empty());
  CHECK(t.states[2].empty());
  CHECK(t.termination.kind == Termination::Kind::fixpoint);
  CHECK(t.termination.start == 1);
  CHECK(t.union_set == make_set({"p"}));
}

TEST_CASE("non-inflationary D can cycle") {
  auto sys = parse_system("alphabet a b\nwffs a b\naxiom a\nrule a -> b\nrule b -> a\n");
  auto t = closure_trace(sys, sys.axioms());
  CHECK(t.termination == Termination{Termination::Kind::cycle, 0, 2});
  CHECK(t.states.back() == t.states[0]);
  CHECK(t.union_set == sys.wffs());
  CHECK(is_inconsistent(sys));
}

TEST_CASE("theory_of and is_inconsistent on the reference system") {
  auto sys = ex1();
  CHECK(theory_of(sys, make_set({"p", "s"})) == sys.wffs());
  CHECK(theory_of(sys, make_set({"p"})) == make_set({"p", "q"}));
  CHECK(theory_of(sys, {}).empty());
  CHECK(is_inconsistent(sys, sys.axioms()));
  CHECK_FALSE(is_inconsistent(sys, make_set({"p"})));
  CHECK_THROWS_AS(theory_of(sys, make_set({"x"})), DomainError);
}

TEST_CASE("depth_of is the first state containing the sentence") {
  auto sys = ex1();
  CHECK(depth_of(sys, F("p")) == 0);
  CHECK(depth_of(sys, F("q")) == 1);
  CHECK(depth_of(sys, F("r")) == 2);
  auto consistent = sys.with_axioms(make_set({"p"}));
  CHECK_THROWS_AS(depth_of(consistent, F("r")), NotDerivable);
  CHECK_THROWS_AS(depth_of(sys, F("z")), DomainError);
}

TEST_CASE("closure agrees with oracles on random systems") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto spec = testing_support::random_system(seed);
    DeductionSystem sys(spec);
    auto t = closure_trace(sys, sys.axioms());
    auto o = oracle::trace(spec, spec.axioms);

    REQUIRE(t.states == o.states);
    REQUIRE(t.union_set == o.theory);
    REQUIRE(t.states.front() == spec.axioms);
    for (std::size_t i = 0; i + 1 < t.states.size(); ++i)
      REQUIRE(t.states[i + 1] == apply_deduction(sys, t.states[i]));
    const auto& term = t.termination;
    REQUIRE(t.states[term.start] == t.states[term.start + term.period]);
    REQUIRE(t.states.size() <= (std::size_t{1} << sys.size()) + 1);
    REQUIRE(is_inconsistent(sys) == oracle::inconsistent_bfs(spec, spec.axioms));

    for (const auto& p : t.union_set) {
      auto n = depth_of(sys, p);
      REQUIRE(t.states[n].count(p));
      for (std::size_t k = 0; k < n; ++k) REQUIRE_FALSE(t.states[k].count(p));
    }
  }
}

TEST_CASE("theory is monotone in the base") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto spec = testing_support::random_system(seed);
    DeductionSystem sys(spec);
    auto pool = oracle::members(spec.wffs);
    const std::uint64_t n = std::uint64_t{1} << pool.size();
    for (std::uint64_t big = 1; big < n; big += 11) {
      auto small = big & (big * 3);
      REQUIRE(is_subset(theory_of(sys, oracle::pick(pool, small)),
                        theory_of(sys, oracle::pick(pool, big))));
    }
  }
}

TEST_CASE("operator law report passes for rule-based D") {
  auto sys = ex1();
  auto r = check_operator_laws(sys, 100, 1);
  CHECK(r.passed());
  CHECK(r.seed == 1);
  REQUIRE(r.laws.size() == 4);
  for (const auto& l : r.laws) {
    CHECK(l.checks == 100);
    CHECK(l.violations == 0);
  }
  CHECK(check_operator_laws(generate_pa_mi(3), 100, 7).passed());
}

TEST_CASE("operator law report is reproducible from the seed") {
  auto a = check_operator_laws(generate_pa_mi(2), 50, 42);
  auto b = check_operator_laws(generate_pa_mi(2), 50, 42);
  CHECK(a.passed() == b.passed());
  for (std::size_t i = 0; i < a.laws.size(); ++i) CHECK(a.laws[i].checks == b.laws[i].checks);
}

TEST_CASE("operator law report catches a non-monotone mutant") {
  // The mutant treats premises as an exact match instead of a subset, so a
  // rule stops firing once unrelated formulas are present.
  auto sys = ex1();
  DeductionOperator mutant = [&sys](const Mask& s) {
    Mask out = sys.empty_mask();
    for (const auto& r : sys.compiled_rules())
      if (r.premises == s) out |= r.conclusions;
    return out;
  };
  auto r = check_operator_laws(sys, mutant, 100, 1);
  CHECK_FALSE(r.passed());
  CHECK(r.laws[1].law == "monotone");
  CHECK(r.laws[1].violations > 0);
  CHECK_FALSE(r.laws[1].counterexamples.empty());
}
