// Acceptance suite: one [PASS]/[FAIL] line per criterion, plus detail lines.
// Exit status is the number of failed criteria.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "incore/cli.hpp"
#include "incore/closure.hpp"
#include "incore/core.hpp"
#include "incore/derivation.hpp"
#include "incore/machine_infinity.hpp"
#include "incore/operator_laws.hpp"
#include "incore/system_io.hpp"
#include "support/exact_eval.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random_systems.hpp"

using namespace incore;
using testing_support::F;

namespace {

constexpr std::uint64_t kSystems = 200;

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int report(Criterion& c, double elapsed, double limit) {
  if (limit > 0 && elapsed >= limit) {
    std::ostringstream s;
    s << "runtime " << elapsed << " s exceeds " << limit << " s";
    c.failures.push_back(s.str());
  }
  bool ok = c.failures.empty();
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": " << c.title << " ("
            << elapsed << " s)\n";
  for (const auto& f : c.failures) std::cout << "    mismatch: " << f << '\n';
  for (const auto& n : c.notes) std::cout << "    note: " << n << '\n';
  return ok ? 0 : 1;
}

FormulaSet reflexivity(unsigned terms) {
  FormulaSet out;
  for (unsigned k = 0; k < terms; ++k) out.insert(Formula(numeral(k) + "=" + numeral(k)));
  return out;
}

FormulaSet core_set(CoreAnalyzer& core) {
  FormulaSet out;
  for (const auto& v : core.consistent_core())
    if (v.is_core()) out.insert(v.sentence);
  return out;
}

const ClassifiedSentence* row_of(const Classification& c, const Formula& p) {
  for (const auto& row : c.sentences)
    if (row.sentence == p) return &row;
  return nullptr;
}

std::string kappa_text(const KappaResult& k) {
  if (!k.value) return "none";
  return to_string(*k.value) + " witness " + k.witness->text();
}

// Criterion 1 -----------------------------------------------------------

int ex1_fixture() {
  Criterion c{1, "EX1 fixture exact values", {}, {}};
  auto t0 = std::chrono::steady_clock::now();
  auto sys = testing_support::ex1();
  CoreAnalyzer core(sys);
  auto cls = core.classify();

  c.expect(cls.inconsistent, "T(A) = W not detected");
  c.expect(core_set(core) == make_set({"p", "q", "s", "t"}),
           "C_A = " + to_string(core_set(core)));
  c.expect(cls.kappa.value == Index{2, 4} && cls.kappa.witness == F("r"),
           "kappa = " + kappa_text(cls.kappa));
  for (const char* name : {"q", "t"}) {
    const auto* row = row_of(cls, F(name));
    c.expect(row && row->index == Index{1, 1} && row->verdict.via_theorem,
             std::string(name) + " not via the theorem at (1,1)");
  }

  // Independent re-derivation of the same goldens.
  const auto& spec = sys.spec();
  c.expect(oracle::inconsistent_bfs(spec, spec.axioms), "oracle: consistent");
  FormulaSet oracle_core;
  for (const auto& p : spec.wffs)
    if (oracle::core_by_subsets(spec, p).core) oracle_core.insert(p);
  c.expect(oracle_core == make_set({"p", "q", "s", "t"}), "oracle C_A = " + to_string(oracle_core));
  auto r_len = oracle::min_support_scan(spec, F("r"), 2);
  c.expect(r_len == std::optional<std::size_t>(4), "oracle m(r) differs");
  return report(c, seconds_since(t0), 1.0);
}

// Criterion 2 -----------------------------------------------------------

struct PaMiFacts {
  bool inconsistent = false;
  FormulaSet core;
  FormulaSet non_core_axioms;
  KappaResult kappa;
};

PaMiFacts pa_mi_facts(unsigned m) {
  auto sys = generate_pa_mi(m);
  CoreAnalyzer core(sys);
  auto cls = core.classify();
  return {cls.inconsistent, core_set(core), cls.non_core_axioms, cls.kappa};
}

int pa_mi_fixture() {
  Criterion c{2, "PA-MI fixture M=3 exact values", {}, {}};
  auto t0 = std::chrono::steady_clock::now();
  const unsigned m = 3;
  auto facts = pa_mi_facts(m);
  const Formula mi(numeral(m + 1) + "=" + numeral(m));

  c.expect(facts.inconsistent, "inconsistency not detected");
  c.expect(facts.core == reflexivity(4),
           "C_A has " + std::to_string(facts.core.size()) + " sentences: " + to_string(facts.core) +
               " (expected the 4 reflexivity equations)");
  c.expect(facts.non_core_axioms.count(mi), "MI axiom " + mi.text() + " not flagged non-core");
  c.expect(facts.kappa.value == Index{1, 8}, "kappa = " + kappa_text(facts.kappa) + " (expected (1,8))");

  // Independent re-derivation with the subset oracle, and the value the
  // fixed goldens actually describe.
  auto sys = generate_pa_mi(m);
  FormulaSet oracle_core;
  for (const auto& p : sys.wffs())
    if (oracle::core_by_subsets(sys.spec(), p).core) oracle_core.insert(p);
  c.note("verified M=3: C_A = " + to_string(oracle_core) + ", kappa = " + kappa_text(facts.kappa));
  c.expect(oracle_core == facts.core, "subset oracle disagrees with core_membership");

  auto m2 = pa_mi_facts(2);
  bool m2_matches = m2.inconsistent && m2.core == reflexivity(4) &&
                    m2.non_core_axioms.count(Formula(numeral(3) + "=" + numeral(2))) &&
                    m2.kappa.value == Index{1, 8};
  c.note(std::string("the expected values (4 reflexivity equations, kappa (1,8)) are those of M=2: ") +
         (m2_matches ? "confirmed" : "not confirmed") + ", kappa(M=2) = " + kappa_text(m2.kappa));
  return report(c, seconds_since(t0), 5.0);
}

// Criterion 3 -----------------------------------------------------------

int operator_laws() {
  Criterion c{3, "operator laws on random systems, mutant caught", {}, {}};
  auto t0 = std::chrono::steady_clock::now();
  std::size_t checks = 0;
  for (std::uint64_t seed = 0; seed < kSystems; ++seed) {
    DeductionSystem sys(testing_support::random_system(seed));
    auto r = check_operator_laws(sys, 100, seed + 1);
    for (const auto& law : r.laws) {
      checks += law.checks;
      if (law.violations)
        c.expect(false, "seed " + std::to_string(seed) + ": " + law.law + " violated");
    }
  }
  c.note(std::to_string(checks) + " law checks");

  auto sys = testing_support::ex1();
  DeductionOperator mutant = [&sys](const Mask& s) {
    Mask out = sys.empty_mask();
    for (const auto& r : sys.compiled_rules())
      if (r.premises == s) out |= r.conclusions;
    return out;
  };
  auto caught = check_operator_laws(sys, mutant, 100, 1);
  c.expect(!caught.passed(), "exact-match premise mutant not caught");
  return report(c, seconds_since(t0), 30.0);
}

// Criterion 4 -----------------------------------------------------------

int theorem_check() {
  Criterion c{4, "every sentence with n >= 1 below kappa is core", {}, {}};
  auto t0 = std::chrono::steady_clock::now();
  std::size_t below = 0;
  for (std::uint64_t seed = 0; seed < kSystems; ++seed) {
    auto spec = testing_support::random_system(seed);
    DeductionSystem sys(spec);
    CoreAnalyzer core(sys);
    auto k = core.kappa();
    for (const auto& p : core.theory()) {
      if (core.derivations().depth(p) == 0) continue;
      if (!below_kappa(core.derivations().index(p), k)) continue;
      ++below;
      if (!oracle::core_by_subsets(spec, p).core)
        c.expect(false, "seed " + std::to_string(seed) + ": " + p.text() + " below kappa, not core");
    }
  }
  c.note(std::to_string(below) + " sentences below kappa checked");
  return report(c, seconds_since(t0), 120.0);
}

// Criterion 5 -----------------------------------------------------------

int oracle_equivalence() {
  Criterion c{5, "core and support length agree with no-pruning oracles", {}, {}};
  auto t0 = std::chrono::steady_clock::now();
  std::size_t core_checks = 0, tuple_checks = 0, scan_checks = 0, deeper = 0;
  for (std::uint64_t seed = 0; seed < kSystems; ++seed) {
    auto spec = testing_support::random_system(seed);
    DeductionSystem sys(spec);
    CoreAnalyzer core(sys);
    const auto& d = core.derivations();
    const std::string tag = "seed " + std::to_string(seed) + ": ";
    for (const auto& v : core.consistent_core()) {
      ++core_checks;
      if (v.is_core() != oracle::core_by_sequences(spec, v.sentence))
        c.expect(false, tag + "core verdict differs for " + v.sentence.text());
    }
    for (const auto& p : core.theory()) {
      auto n = d.depth(p);
      if (n == 0) continue;
      auto best = d.minimal_support(p, n).length;
      if (auto all = oracle::all_sequences(spec, p, n, 22)) {
        ++tuple_checks;
        std::size_t lo = SIZE_MAX;
        for (const auto& levels : *all) {
          FormulaSet s;
          for (const auto& l : levels) s.insert(l.begin(), l.end());
          lo = std::min(lo, oracle::length(s));
        }
        if (lo != best) c.expect(false, tag + "m(" + p.text() + ") differs from tuple enumeration");
      } else {
        ++scan_checks;
        if (oracle::min_support_scan(spec, p, n) != best)
          c.expect(false, tag + "m(" + p.text() + ") differs from the scan");
      }
      auto wide = d.minimal_support(p, DepthPolicy::up_to(d.default_depth_bound()));
      if (wide.length != best) {
        if (deeper++ < 5)
          c.note(tag + "m(" + p.text() + ") at depth " + std::to_string(n) + " is " +
                 std::to_string(best) + ", over all depths " + std::to_string(wide.length));
      }
    }
  }
  c.note(std::to_string(core_checks) + " core verdicts, " + std::to_string(tuple_checks) +
         " lengths by tuple enumeration, " + std::to_string(scan_checks) + " by subset scan");
  c.note(std::to_string(deeper) + " sentences where the all-depths m is smaller");
  return report(c, seconds_since(t0), 0);
}

// Criterion 6 -----------------------------------------------------------

int guard_soundness() {
  Criterion c{6, "guard soundness on random expressions", {}, {}};
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(2024);
  std::size_t safe = 0, hazards = 0;
  std::string example;
  for (int i = 0; i < 1000; ++i) {
    std::int64_t m = i % 2 ? 100 : 10;
    auto e = testing_support::random_expr(rng, m, 4);
    auto g = eval_guarded(e, m);
    auto exact = testing_support::exact_value(e);
    if (g.safe) {
      ++safe;
      if (exact != g.result.value) c.expect(false, "safe but wrong: " + to_string(e));
    } else if (exact != g.result.value) {
      if (hazards++ == 0)
        example = to_string(e) + " = " + std::to_string(g.result.value) + " at M=" +
                  std::to_string(m) + ", exact " + exact.str();
    }
  }
  c.expect(hazards > 0, "no unsafe-with-wrong-value case generated");
  c.note(std::to_string(safe) + " safe, " + std::to_string(hazards) + " unsafe with a wrong value");
  if (!example.empty()) c.note("example: " + example);
  return report(c, seconds_since(t0), 5.0);
}

// Criterion 7 -----------------------------------------------------------

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

int round_trip() {
  Criterion c{7, "round trip and deterministic CLI output", {}, {}};
  auto t0 = std::chrono::steady_clock::now();
  const std::string data = INCORE_DATA_DIR;

  std::vector<std::pair<std::string, DeductionSystem>> fixtures;
  for (const char* name : {"ex1.sys", "pa_mi_3.sys"})
    fixtures.emplace_back(name, load_system(data + "/" + name));
  for (unsigned m = 1; m <= kDefaultPaMiCap; ++m)
    fixtures.emplace_back("pa-mi " + std::to_string(m), generate_pa_mi(m));
  for (std::uint64_t seed = 0; seed < kSystems; ++seed)
    fixtures.emplace_back("random " + std::to_string(seed),
                          DeductionSystem(testing_support::random_system(seed)));
  for (const auto& [name, sys] : fixtures) {
    auto text = serialize_system(sys);
    auto back = parse_system(text);
    c.expect(back == sys, name + ": parse(serialize(S)) != S");
    c.expect(serialize_system(back) == text, name + ": serialization not stable");
  }
  c.note(std::to_string(fixtures.size()) + " fixtures round-tripped");

  auto run = [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run_cli(args, out, err);
    return std::to_string(code) + "\n" + out.str() + err.str();
  };
  std::size_t runs = 0;
  for (const char* name : {"ex1.sys", "pa_mi_3.sys"}) {
    const auto path = data + "/" + name;
    for (const char* fmt : {"text", "json"}) {
      std::vector<std::vector<std::string>> commands = {
          {"close", path}, {"core", path}, {"kappa", path}, {"classify", path},
          {"laws", path, "--seed", "7"}, {"equiv", path, path}};
      for (auto args : commands) {
        args.insert(args.end(), {"--format", fmt});
        ++runs;
        if (run(args) != run(args)) c.expect(false, "output differs: " + args[0] + " " + name);
      }
    }
  }
  for (auto args : std::vector<std::vector<std::string>>{
           {"index", data + "/ex1.sys", "--sentence", "r"},
           {"sigma", data + "/ex1.sys", "--sentence", "q"},
           {"demo", "pa-mi", "--m", "3"},
           {"satdemo", "--m", "100", "--expr", "(60+50)-50"}}) {
    ++runs;
    if (run(args) != run(args)) c.expect(false, "output differs: " + args[0]);
  }
  c.expect(run({"demo", "pa-mi", "--m", "3"}) == "0\n" + read_file(data + "/pa_mi_3.sys"),
           "pa_mi_3.sys differs from the generator output");
  c.note(std::to_string(runs) + " CLI invocations repeated");
  return report(c, seconds_since(t0), 0);
}

}  // namespace

int main() {
  std::cout.setf(std::ios::fixed);
  std::cout.precision(3);
  const std::vector<std::function<int()>> criteria = {
      ex1_fixture, pa_mi_fixture, operator_laws, theorem_check,
      oracle_equivalence, guard_soundness, round_trip};
  int failed = 0;
  for (const auto& run : criteria) {
    try {
      failed += run();
    } catch (const std::exception& e) {
      std::cout << "[FAIL] criterion threw: " << e.what() << '\n';
      ++failed;
    }
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed;
}
