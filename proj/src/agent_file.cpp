#include "dpl/agent_file.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "dpl/parser.hpp"

namespace dpl {

namespace {

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

// "head { body }" with both braces on the line.
bool split_braces(const std::string& line, std::string& head,
                  std::string& body) {
  std::size_t open = line.find('{');
  std::size_t close = line.rfind('}');
  if (open == std::string::npos || close == std::string::npos || close < open)
    return false;
  head = strip(line.substr(0, open));
  body = strip(line.substr(open + 1, close - open - 1));
  return strip(line.substr(close + 1)).empty();
}

[[noreturn]] void fail(const std::string& msg, int line) {
  throw ParseError(msg, line, 1);
}

struct Loader {
  const AgentFileOptions& opts;
  std::optional<Vocabulary> vocab;
  std::vector<PlanEntry> plan_entries;
  std::vector<FormulaPtr> knowledge;
  std::vector<RankedFormula> beliefs, desires;
  std::vector<std::pair<std::string, int>> intents;  // name, line

  FormulaPtr parse(const std::string& text, int line, bool conjunctive) {
    if (!vocab) fail("the vocab line must come first", line);
    FormulaPtr f;
    try {
      f = parse_formula(text, *vocab, PlanLibrary{});
    } catch (const ParseError& e) {
      throw ParseError(e.message(), line, e.column());
    }
    if (!is_propositional(f))
      fail("base formulas must be propositional: " + text, line);
    if (conjunctive && opts.conjunctive_strict && !is_conjunctive_formula(f))
      fail("expected a conjunction of literals: " + text, line);
    return f;
  }

  void handle(const std::string& line, int lineno) {
    if (line.rfind("vocab:", 0) == 0) {
      if (vocab) fail("duplicate vocab line", lineno);
      try {
        vocab = Vocabulary(split_ws(line.substr(6)));
      } catch (const Error& e) {
        fail(e.what(), lineno);
      }
      return;
    }
    std::string head, body;
    if (split_braces(line, head, body)) {
      std::vector<std::string> hw = split_ws(head);
      if (hw.size() == 2 && hw[0] == "plan") {
        handle_plan(hw[1], body, lineno);
        return;
      }
      if (hw.size() == 1 && hw[0] == "knowledge") {
        for (const std::string& part : split_list(body))
          knowledge.push_back(parse(part, lineno, true));
        return;
      }
      if (hw.size() == 2 && (hw[0] == "belief" || hw[0] == "desire")) {
        int rank = parse_rank(hw[1], lineno);
        auto& dst = hw[0] == "belief" ? beliefs : desires;
        dst.push_back({parse(body, lineno, true), rank});
        return;
      }
      fail("unrecognized construct: " + head, lineno);
    }
    std::vector<std::string> words = split_ws(line);
    if (words.size() == 2 && words[0] == "intend") {
      intents.emplace_back(words[1], lineno);
      return;
    }
    fail("unrecognized line: " + line, lineno);
  }

  static std::vector<std::string> split_list(const std::string& body) {
    std::vector<std::string> out;
    std::istringstream is(body);
    std::string part;
    while (std::getline(is, part, ';')) {
      part = strip(part);
      if (!part.empty()) out.push_back(part);
    }
    return out;
  }

  int parse_rank(const std::string& text, int lineno) {
    try {
      std::size_t used = 0;
      int rank = std::stoi(text, &used);
      if (used != text.size() || rank < 0) throw std::invalid_argument(text);
      return rank;
    } catch (const std::exception&) {
      fail("rank must be a decimal natural: " + text, lineno);
    }
  }

  void handle_plan(const std::string& name, const std::string& body,
                   int lineno) {
    FormulaPtr pre, post;
    for (const std::string& part : split_list(body)) {
      if (part.rfind("pre:", 0) == 0)
        pre = parse(strip(part.substr(4)), lineno, true);
      else if (part.rfind("post:", 0) == 0)
        post = parse(strip(part.substr(5)), lineno, true);
      else
        fail("plan clause must be 'pre:' or 'post:': " + part, lineno);
    }
    if (!pre || !post) fail("plan needs both pre: and post:", lineno);
    plan_entries.push_back({name, std::move(pre), std::move(post)});
  }

  AgentProgram finish(int last_line) {
    if (!vocab) fail("missing vocab line", last_line);
    AgentProgram ag;
    ag.vocab = *vocab;
    try {
      ag.library = PlanLibrary::make(plan_entries);
    } catch (const Error& e) {
      fail(e.what(), last_line);
    }
    ag.knowledge = std::move(knowledge);
    ag.beliefs = StratifiedBase(std::move(beliefs));
    ag.desires = StratifiedBase(std::move(desires));
    for (const auto& [name, line] : intents) {
      if (!ag.library.contains(name)) fail("intend of unknown plan: " + name, line);
      ag.intentions.insert(name);
    }
    return ag;
  }
};

}  // namespace

AgentProgram read_agent(std::istream& in, const AgentFileOptions& opts) {
  Loader loader{opts, {}, {}, {}, {}, {}, {}};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::string line = strip(raw);
    if (line.empty()) continue;
    loader.handle(line, lineno);
  }
  return loader.finish(lineno);
}

AgentProgram load_agent_file(const std::string& path,
                             const AgentFileOptions& opts) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open agent file: " + path);
  return read_agent(in, opts);
}

void write_agent(const AgentProgram& ag, std::ostream& os) {
  os << "vocab:";
  for (const std::string& s : ag.vocab.symbols()) os << ' ' << s;
  os << '\n';
  for (const Plan& p : ag.library.plans())
    os << "plan " << p.name << " { pre: " << print_formula(p.pre)
       << "; post: " << to_string(p.post) << " }\n";

  std::vector<std::string> printed;
  for (const FormulaPtr& f : ag.knowledge) printed.push_back(print_formula(f));
  std::sort(printed.begin(), printed.end());
  os << "knowledge {";
  for (std::size_t i = 0; i < printed.size(); ++i)
    os << (i ? " ; " : " ") << printed[i];
  os << (printed.empty() ? "}" : " }") << '\n';

  auto write_base = [&](const char* keyword, const StratifiedBase& base) {
    std::vector<std::pair<int, std::string>> rows;
    for (const RankedFormula& e : base.entries())
      rows.emplace_back(e.rank, print_formula(e.formula));
    std::sort(rows.begin(), rows.end());
    for (const auto& [rank, text] : rows)
      os << keyword << ' ' << rank << " { " << text << " }\n";
  };
  write_base("belief", ag.beliefs);
  write_base("desire", ag.desires);
  for (const std::string& name : ag.intentions) os << "intend " << name << '\n';
}

std::string agent_to_string(const AgentProgram& ag) {
  std::ostringstream os;
  write_agent(ag, os);
  return os.str();
}

}  // namespace dpl
