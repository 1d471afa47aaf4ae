#include "incore/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <ostream>
#include <sstream>

#include "incore/closure.hpp"
#include "incore/core.hpp"
#include "incore/errors.hpp"
#include "incore/machine_infinity.hpp"
#include "incore/operator_laws.hpp"
#include "incore/report.hpp"
#include "incore/system_io.hpp"

namespace incore::cli {

namespace {

using nlohmann::json;
using Table = std::vector<std::vector<std::string>>;

void print_table(std::ostream& out, const Table& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], r[c].size());
    }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

std::string show(const std::optional<Index>& i) { return i ? to_string(*i) : "axiom"; }

std::string show(const KappaResult& k) {
  if (!k.value) return "none";
  return to_string(*k.value) + ", witness " + k.witness->text();
}

std::string show(const DerivationSequence& seq) {
  std::string s = "(";
  for (std::size_t i = 0; i < seq.levels.size(); ++i) {
    if (i) s += ", ";
    s += to_string(seq.levels[i]);
  }
  return s + ")";
}

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

const DeductionSystem& only_input(const std::vector<DeductionSystem>& systems) {
  return systems.front();
}

Formula requested_sentence(const CommandRequest& req, const DeductionSystem& sys) {
  if (!req.sentence) throw ParseError(0, "--sentence is required");
  Formula f(*req.sentence);
  sys.id_of(f);  // DomainError when not a wff
  return f;
}

int do_close(const CommandRequest& req, const DeductionSystem& sys, std::ostream& out) {
  auto trace = closure_trace(sys, sys.axioms());
  bool inconsistent = trace.union_set == sys.wffs();
  if (req.format == Format::json) {
    emit(out, to_json(trace, sys));
    return kExitOk;
  }
  for (std::size_t i = 0; i < trace.states.size(); ++i)
    out << "T_" << i << " = " << to_string(trace.states[i]) << '\n';
  const auto& t = trace.termination;
  if (t.kind == Termination::Kind::fixpoint) {
    out << "termination: fixpoint at step " << t.start << '\n';
  } else {
    out << "termination: cycle of period " << t.period << " entered at step " << t.start
        << '\n';
  }
  out << "T(A) = " << to_string(trace.union_set) << '\n';
  out << (inconsistent ? "T(A) = W: INCONSISTENT" : "T(A) != W: consistent") << '\n';
  return kExitOk;
}

int do_index(const CommandRequest& req, const DeductionSystem& sys, std::ostream& out) {
  DerivationAnalyzer d(sys, req.budget);
  Formula p = requested_sentence(req, sys);
  auto n = d.depth(p);
  if (n == 0) throw AxiomHasNoIndex(p.text());
  auto best = req.all_depths ? d.minimal_support(p, DepthPolicy::up_to(*req.all_depths))
                             : d.minimal_support(p, n);
  Index idx{n, best.length};
  if (req.format == Format::json) {
    emit(out, to_json(idx));
    return kExitOk;
  }
  out << "index(" << p.text() << ") = " << to_string(idx) << '\n';
  out << "support: " << show(best.witness) << '\n';
  return kExitOk;
}

int do_sigma(const CommandRequest& req, const DeductionSystem& sys, std::ostream& out) {
  DerivationAnalyzer d(sys, req.budget);
  Formula p = requested_sentence(req, sys);
  auto policy = req.all_depths ? DepthPolicy::up_to(*req.all_depths) : DepthPolicy::minimal();
  auto result = d.enumerate(p, policy);
  if (req.format == Format::json) {
    json j = to_json(result);
    j["sentence"] = p.text();
    j["depth"] = d.depth(p);
    j["policy"] = req.all_depths ? "all-depths" : "minimal-depth";
    j["bound"] = req.all_depths ? json(*req.all_depths) : json(nullptr);
    emit(out, j);
  } else {
    out << "sentence " << p.text() << ", depth " << d.depth(p) << ", "
        << (req.all_depths ? "all depths up to " + std::to_string(*req.all_depths)
                           : std::string("minimal depth"))
        << ": " << result.sequences.size() << " sequence(s)\n";
    for (const auto& s : result.sequences) out << show(s) << '\n';
    if (!result.complete) out << "PARTIAL: node budget of " << req.budget << " exhausted\n";
  }
  return result.complete ? kExitOk : kExitBudget;
}

int do_core(const CommandRequest& req, const DeductionSystem& sys, std::ostream& out) {
  CoreAnalyzer core(sys, req.budget);
  std::vector<CoreVerdict> verdicts;
  if (req.sentence) {
    verdicts.push_back(core.membership(requested_sentence(req, sys)));
  } else {
    verdicts = core.consistent_core();
  }
  std::vector<bool> minimal;
  for (const auto& v : verdicts) minimal.push_back(core.core_at_minimal_depth(v.sentence));

  if (req.format == Format::json) {
    json rows = json::array();
    FormulaSet members;
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
      json row = to_json(verdicts[i]);
      row.erase("via_theorem");
      row["core_at_minimal_depth"] = static_cast<bool>(minimal[i]);
      rows.push_back(row);
      if (verdicts[i].is_core()) members.insert(verdicts[i].sentence);
    }
    emit(out, {{"inconsistent", core.inconsistent()}, {"verdicts", rows},
               {"core", to_json(members)}});
    return kExitOk;
  }
  Table t{{"sentence", "status", "witness", "minimal-depth reading"}};
  FormulaSet members;
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    const auto& v = verdicts[i];
    t.push_back({v.sentence.text(), v.is_core() ? "core" : "non-core",
                 v.witness ? to_string(*v.witness) : "-", minimal[i] ? "core" : "non-core"});
    if (v.is_core()) members.insert(v.sentence);
  }
  print_table(out, t);
  if (!req.sentence) out << "C_A = " << to_string(members) << '\n';
  return kExitOk;
}

int do_kappa(const CommandRequest& req, const DeductionSystem& sys, std::ostream& out) {
  CoreAnalyzer core(sys, req.budget);
  if (req.sentence) {
    Formula p = requested_sentence(req, sys);
    auto bound = core.kappa_upper_bound(p);
    if (req.format == Format::json) {
      emit(out, {{"sentence", p.text()}, {"upper_bound", to_json(bound)}});
    } else {
      out << "kappa <= " << to_string(bound) << " (via " << p.text() << ")\n";
    }
    return kExitOk;
  }
  auto k = core.kappa();
  if (req.format == Format::json) {
    emit(out, to_json(k));
  } else {
    out << "kappa = " << show(k) << '\n';
  }
  return kExitOk;
}

int do_classify(const CommandRequest& req, const DeductionSystem& sys, std::ostream& out) {
  auto c = CoreAnalyzer(sys, req.budget).classify();
  if (req.format == Format::json) {
    emit(out, to_json(c));
    return kExitOk;
  }
  out << (c.inconsistent ? "T(A) = W: INCONSISTENT" : "T(A) != W: consistent") << '\n';
  out << "kappa = " << show(c.kappa) << '\n';
  Table t{{"sentence", "depth", "index", "status", "via theorem", "witness"}};
  for (const auto& r : c.sentences) {
    std::string status = r.verdict.is_core() ? "core" : "non-core";
    if (!r.index && !r.verdict.is_core()) status = "non-core axiom";
    t.push_back({r.sentence.text(), std::to_string(r.depth), show(r.index), status,
                 r.index ? (r.verdict.via_theorem ? "yes" : "no") : "-",
                 r.verdict.witness ? to_string(*r.verdict.witness) : "-"});
  }
  print_table(out, t);
  if (!c.non_core_axioms.empty())
    out << "non-core axioms: " << to_string(c.non_core_axioms) << '\n';
  return kExitOk;
}

int do_equiv(const CommandRequest& req, const std::vector<DeductionSystem>& systems,
             std::ostream& out) {
  auto r = compare_axiomatizations(systems[0], systems[1], req.budget);
  if (req.format == Format::json) {
    emit(out, to_json(r));
    return kExitOk;
  }
  out << "T(A) = " << to_string(r.theory_first) << '\n';
  out << "T(B) = " << to_string(r.theory_second) << '\n';
  out << "equivalent: " << (r.equivalent ? "yes" : "no") << '\n';
  if (!r.equivalent) return kExitOk;
  Table t{{"sentence", "index under A", "index under B", "changed"}};
  for (const auto& row : r.rows)
    t.push_back({row.sentence.text(), show(row.first), show(row.second),
                 row.first != row.second ? "yes" : "no"});
  print_table(out, t);
  out << "kappa(A) = " << show(r.kappa_first) << '\n';
  out << "kappa(B) = " << show(r.kappa_second) << '\n';
  return kExitOk;
}

int do_laws(const CommandRequest& req, const DeductionSystem& sys, std::ostream& out) {
  if (req.samples == 0) throw ParseError(0, "--samples must be at least 1");
  auto r = check_operator_laws(sys, req.samples, req.seed);
  if (req.format == Format::json) {
    emit(out, to_json(r));
    return kExitOk;
  }
  for (const auto& l : r.laws) {
    out << l.law << ": " << l.checks << " checks, " << l.violations << " violations\n";
    for (const auto& c : l.counterexamples) out << "  " << c << '\n';
  }
  out << "seed " << r.seed << ", samples " << r.samples << ": "
      << (r.passed() ? "PASS" : "FAIL") << '\n';
  return kExitOk;
}

int do_demo(const CommandRequest& req, std::ostream& out) {
  auto sys = generate_pa_mi(req.m);
  bool inconsistent = is_inconsistent(sys);
  auto text = serialize_system(sys);
  if (req.format == Format::json) {
    emit(out, {{"m", req.m},
               {"wffs", sys.wffs().size()},
               {"axioms", sys.axioms().size()},
               {"rules", sys.rules().size()},
               {"inconsistent", inconsistent},
               {"system", text}});
    return kExitOk;
  }
  out << "# PA fragment with machine infinity M=" << req.m << ": " << sys.wffs().size()
      << " wffs, " << sys.axioms().size() << " axioms, " << sys.rules().size()
      << " rules, " << (inconsistent ? "inconsistent" : "consistent") << '\n'
      << text;
  return kExitOk;
}

boost::multiprecision::cpp_int exact_value(const Expr& e) {
  if (const auto* lit = std::get_if<std::int64_t>(&e.node)) return *lit;
  const auto& bin = *std::get<std::shared_ptr<const Expr::Binary>>(e.node);
  auto l = exact_value(bin.lhs), r = exact_value(bin.rhs);
  switch (bin.op) {
    case ArithOp::add: return l + r;
    case ArithOp::sub: return l - r;
    case ArithOp::mul: return l * r;
  }
  return 0;
}

int do_satdemo(const CommandRequest& req, std::ostream& out) {
  if (req.expr.empty()) throw ParseError(0, "--expr is required");
  auto e = parse_expr(req.expr);
  auto g = eval_guarded(e, req.m);
  auto exact = exact_value(e).str();
  if (req.format == Format::json) {
    json j = to_json(g);
    j["m"] = req.m;
    j["expression"] = to_string(e);
    j["exact"] = exact;
    emit(out, j);
    return kExitOk;
  }
  out << "expression: " << to_string(e) << '\n'
      << "M: " << req.m << '\n'
      << "value: " << g.result.value << '\n'
      << "saturated: " << (g.result.saturated ? "true" : "false") << '\n'
      << "safe: " << (g.safe ? "true" : "false") << '\n'
      << "exact: " << exact << '\n';
  return kExitOk;
}

}  // namespace

int run_command(const CommandRequest& req, std::ostream& out, std::ostream& err) {
  try {
    std::vector<DeductionSystem> systems;
    for (const auto& path : req.inputs) systems.push_back(load_system(path));
    switch (req.subcommand) {
      case Subcommand::close: return do_close(req, only_input(systems), out);
      case Subcommand::index: return do_index(req, only_input(systems), out);
      case Subcommand::sigma: return do_sigma(req, only_input(systems), out);
      case Subcommand::core: return do_core(req, only_input(systems), out);
      case Subcommand::kappa: return do_kappa(req, only_input(systems), out);
      case Subcommand::classify: return do_classify(req, only_input(systems), out);
      case Subcommand::equiv: return do_equiv(req, systems, out);
      case Subcommand::laws: return do_laws(req, only_input(systems), out);
      case Subcommand::demo_pa_mi: return do_demo(req, out);
      case Subcommand::satdemo: return do_satdemo(req, out);
    }
  } catch (const NotDerivable& e) {
    err << "error: " << e.what() << '\n';
    return kExitNotDerivable;
  } catch (const AxiomHasNoIndex& e) {
    err << "error: " << e.what() << '\n';
    return kExitNotDerivable;
  } catch (const InvalidWitness& e) {
    err << "error: " << e.what() << '\n';
    return kExitNotDerivable;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Consistent-core analysis of finite deduction systems", "incore"};
  app.require_subcommand(1);

  CommandRequest req;
  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_system = [&](CLI::App* sub) {
    sub->add_option("system", req.inputs, "system file")->required()->expected(1);
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", req.budget, "partial-sequence budget");
  };
  struct Entry {
    CLI::App* app;
    Subcommand cmd;
  };
  std::vector<Entry> entries;
  auto sub = [&](const char* name, const char* help, Subcommand cmd) {
    auto* s = app.add_subcommand(name, help);
    add_format(s);
    entries.push_back({s, cmd});
    return s;
  };

  auto* close = sub("close", "iterate the theory sequence and test inconsistency", Subcommand::close);
  add_system(close);

  auto* index = sub("index", "index (depth, support length) of a sentence", Subcommand::index);
  add_system(index);
  add_budget(index);
  index->add_option("--sentence", req.sentence)->required();
  index->add_option("--all-depths", req.all_depths, "minimise support length over every depth up to this bound");

  auto* sigma = sub("sigma", "enumerate support sequences of a sentence", Subcommand::sigma);
  add_system(sigma);
  add_budget(sigma);
  sigma->add_option("--sentence", req.sentence)->required();
  sigma->add_option("--all-depths", req.all_depths, "enumerate every depth up to this bound");

  auto* core = sub("core", "consistent-core membership", Subcommand::core);
  add_system(core);
  add_budget(core);
  core->add_option("--sentence", req.sentence);

  auto* kap = sub("kappa", "kappa threshold, or an upper bound via --sentence", Subcommand::kappa);
  add_system(kap);
  add_budget(kap);
  kap->add_option("--sentence", req.sentence);

  auto* cls = sub("classify", "index, core status and theorem coverage per sentence",
                  Subcommand::classify);
  add_system(cls);
  add_budget(cls);

  auto* equiv = sub("equiv", "compare two axiomatizations of one system", Subcommand::equiv);
  equiv->add_option("systems", req.inputs, "two system files")->required()->expected(2);
  add_budget(equiv);

  auto* laws = sub("laws", "sample the operator laws of D", Subcommand::laws);
  add_system(laws);
  laws->add_option("--samples", req.samples);
  laws->add_option("--seed", req.seed);

  std::string demo_name;
  auto* demo = sub("demo", "generate a demonstration system", Subcommand::demo_pa_mi);
  demo->add_option("name", demo_name)->required()->check(CLI::IsMember({"pa-mi"}));
  demo->add_option("--m", req.m, "machine infinity")->required();

  std::int64_t sat_m = 0;
  auto* sat = sub("satdemo", "guarded saturating evaluation", Subcommand::satdemo);
  sat->add_option("--m", sat_m, "machine infinity")->required()->check(CLI::PositiveNumber);
  sat->add_option("--expr", req.expr, "infix expression")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  for (const auto& e : entries)
    if (e.app->parsed()) req.subcommand = e.cmd;
  req.format = format == "json" ? Format::json : Format::text;
  if (req.subcommand == Subcommand::satdemo) {
    if (sat_m > UINT32_MAX) {
      err << "error: --m too large\n";
      return kExitUsage;
    }
    req.m = static_cast<unsigned>(sat_m);
  }
  return run_command(req, out, err);
}

}  // namespace incore::cli
