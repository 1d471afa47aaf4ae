#include "incore/report.hpp"

namespace incore {

using nlohmann::json;

const char* termination_name(Termination::Kind k) {
  return k == Termination::Kind::fixpoint ? "fixpoint" : "cycle";
}

json to_json(const FormulaSet& s) {
  json out = json::array();
  for (const auto& f : s) out.push_back(f.text());
  return out;
}

json to_json(const Index& i) {
  return {{"depth", i.depth}, {"support_length", i.support_length}};
}

json to_json(const std::optional<Index>& i) { return i ? to_json(*i) : json(nullptr); }

json to_json(const DerivationSequence& seq) {
  json out = json::array();
  for (const auto& level : seq.levels) out.push_back(to_json(level));
  return out;
}

json to_json(const KappaResult& k) {
  return {{"value", to_json(k.value)},
          {"witness", k.witness ? json(k.witness->text()) : json(nullptr)}};
}

json to_json(const CoreVerdict& v) {
  return {{"sentence", v.sentence.text()},
          {"status", v.is_core() ? "core" : "non-core"},
          {"witness", v.witness ? to_json(*v.witness) : json(nullptr)},
          {"via_theorem", v.via_theorem}};
}

json to_json(const ClosureTrace& t, const DeductionSystem& sys) {
  json states = json::array();
  for (const auto& s : t.states) states.push_back(to_json(s));
  return {{"states", states},
          {"termination",
           {{"kind", termination_name(t.termination.kind)},
            {"start", t.termination.start},
            {"period", t.termination.period}}},
          {"theory", to_json(t.union_set)},
          {"inconsistent", t.union_set == sys.wffs()}};
}

json to_json(const SupportEnumeration& e) {
  json seqs = json::array();
  for (const auto& s : e.sequences) seqs.push_back(to_json(s));
  return {{"complete", e.complete}, {"sequences", seqs}};
}

json to_json(const Classification& c) {
  json rows = json::array();
  for (const auto& r : c.sentences) {
    json row = to_json(r.verdict);
    row["depth"] = r.depth;
    row["index"] = to_json(r.index);
    rows.push_back(row);
  }
  return {{"inconsistent", c.inconsistent},
          {"kappa", to_json(c.kappa)},
          {"sentences", rows},
          {"non_core_axioms", to_json(c.non_core_axioms)}};
}

json to_json(const EquivalenceReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"sentence", row.sentence.text()},
                    {"first", to_json(row.first)},
                    {"second", to_json(row.second)},
                    {"changed", row.first != row.second}});
  json out = {{"equivalent", r.equivalent},
              {"theory_first", to_json(r.theory_first)},
              {"theory_second", to_json(r.theory_second)},
              {"rows", rows}};
  if (r.equivalent) {
    out["kappa_first"] = to_json(r.kappa_first);
    out["kappa_second"] = to_json(r.kappa_second);
  } else {
    out["kappa_first"] = nullptr;
    out["kappa_second"] = nullptr;
  }
  return out;
}

json to_json(const LawReport& r) {
  json laws = json::array();
  for (const auto& l : r.laws)
    laws.push_back({{"law", l.law},
                    {"checks", l.checks},
                    {"violations", l.violations},
                    {"counterexamples", l.counterexamples}});
  return {{"seed", r.seed}, {"samples", r.samples}, {"passed", r.passed()}, {"laws", laws}};
}

json to_json(const GuardVerdict& g) {
  return {{"value", g.result.value}, {"saturated", g.result.saturated}, {"safe", g.safe}};
}

}  // namespace incore
