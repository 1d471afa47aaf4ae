#include "incore/system_io.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <utility>
#include <vector>

#include "incore/errors.hpp"

namespace incore {

namespace {

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream ss{std::string(line)};
  for (std::string w; ss >> w;) out.push_back(std::move(w));
  return out;
}

struct Located {
  Formula formula;
  std::size_t line;
};

class Parser {
 public:
  SystemSpec run(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++line_no;
      parse_line(text.substr(start, end - start), line_no);
      start = end + 1;
    }
    return finish();
  }

 private:
  void parse_line(std::string_view line, std::size_t no) {
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    auto words = split_words(line);
    if (words.empty()) return;
    const std::string& kw = words.front();
    std::vector<std::string> args(words.begin() + 1, words.end());

    if (kw == "alphabet") {
      if (alphabet_line_) throw ParseError(no, "duplicate alphabet directive");
      if (args.empty()) throw ParseError(no, "alphabet lists no symbols");
      std::vector<char> symbols;
      for (const auto& a : args) {
        if (a.size() != 1)
          throw ParseError(no, "alphabet symbol must be one character: \"" + a + "\"");
        symbols.push_back(a[0]);
      }
      try {
        spec_.alphabet = Alphabet(std::move(symbols));
      } catch (const DomainError& e) {
        throw ParseError(no, e.what());
      }
      alphabet_line_ = no;
    } else if (kw == "wffs") {
      for (const auto& a : args) {
        Formula f(a);
        if (!spec_.wffs.insert(f).second)
          throw ParseError(no, "duplicate wff: " + a);
        formulas_.push_back({f, no});
      }
    } else if (kw == "axiom") {
      if (args.size() != 1) throw ParseError(no, "axiom takes exactly one formula");
      Formula f(args[0]);
      spec_.axioms.insert(f);
      axioms_.push_back({f, no});
      formulas_.push_back({f, no});
    } else if (kw == "rule") {
      RuleInstance r;
      bool seen_arrow = false;
      for (const auto& a : args) {
        if (a == "->") {
          if (seen_arrow) throw ParseError(no, "rule has more than one '->'");
          seen_arrow = true;
          continue;
        }
        Formula f(a);
        (seen_arrow ? r.conclusions : r.premises).insert(f);
        formulas_.push_back({f, no});
        rule_formulas_.push_back({f, no});
      }
      if (!seen_arrow) throw ParseError(no, "rule is missing '->'");
      if (r.conclusions.empty()) throw ParseError(no, "rule has no conclusions");
      spec_.rules.insert(std::move(r));
    } else {
      throw ParseError(no, "unknown directive: " + kw);
    }
  }

  SystemSpec finish() {
    if (!alphabet_line_) throw ParseError(0, "missing alphabet directive");
    if (spec_.wffs.empty()) throw ParseError(0, "missing or empty wffs directive");
    for (const auto& [f, no] : formulas_) {
      auto pos = spec_.alphabet.first_foreign(f.text());
      if (pos != std::string::npos)
        throw ParseError(no, std::string("unknown symbol '") + f.text()[pos] +
                                 "' in formula \"" + f.text() + "\"");
    }
    for (const auto& [f, no] : axioms_)
      if (!spec_.wffs.count(f))
        throw ParseError(no, "axiom not a declared wff: " + f.text());
    for (const auto& [f, no] : rule_formulas_)
      if (!spec_.wffs.count(f))
        throw ParseError(no, "rule formula not a declared wff: " + f.text());
    return std::move(spec_);
  }

  SystemSpec spec_;
  std::size_t alphabet_line_ = 0;
  std::vector<Located> formulas_;
  std::vector<Located> axioms_;
  std::vector<Located> rule_formulas_;
};

}  // namespace

DeductionSystem parse_system(std::string_view text) {
  SystemSpec spec;
  try {
    spec = Parser{}.run(text);
  } catch (const ParseError&) {
    throw;
  } catch (const DomainError& e) {
    // Formula construction rejects only malformed tokens, which cannot reach
    // here after whitespace splitting; keep the message anyway.
    throw ParseError(0, e.what());
  }
  try {
    return DeductionSystem(std::move(spec));
  } catch (const DomainError& e) {
    throw ParseError(0, e.what());
  }
}

DeductionSystem parse_system(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_system(buf.str());
}

DeductionSystem load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return parse_system(in);
}

std::string serialize_system(const DeductionSystem& sys) {
  std::string out = "alphabet";
  for (char c : sys.alphabet().symbols()) (out += ' ') += c;
  out += "\nwffs";
  for (const auto& w : sys.wffs()) (out += ' ') += w.text();
  out += '\n';
  for (const auto& a : sys.axioms()) out += "axiom " + a.text() + '\n';
  for (const auto& r : sys.rules()) {
    out += "rule";
    for (const auto& p : r.premises) (out += ' ') += p.text();
    out += " ->";
    for (const auto& c : r.conclusions) (out += ' ') += c.text();
    out += '\n';
  }
  return out;
}

}  // namespace incore
