#include "dpl/session.hpp"

#include <fstream>
#include <sstream>

#include "dpl/oracle.hpp"
#include "dpl/parser.hpp"
#include "dpl/semantics.hpp"

namespace dpl {

namespace {

std::string strip_quotes(std::string s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(0, 1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.pop_back();
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"')
    s = s.substr(1, s.size() - 2);
  return s;
}

std::pair<std::string, std::string> split_word(const std::string& line) {
  std::size_t i = line.find_first_not_of(" \t");
  if (i == std::string::npos) return {"", ""};
  std::size_t j = line.find_first_of(" \t", i);
  if (j == std::string::npos) return {line.substr(i), ""};
  return {line.substr(i, j - i), line.substr(j + 1)};
}

void warn_if_incoherent(const AgentProgram& ag, std::ostream& out) {
  CoherenceReport rep = is_coherent(ag);
  if (!rep.coherent())
    out << "warning: program incoherent (" << rep.summary() << ")\n";
}

}  // namespace

Session::Session(AgentProgram ag, const SessionOptions& opts)
    : initial_(ag), current_(std::move(ag)), opts_(opts) {}

Session Session::from_program(AgentProgram ag, const SessionOptions& opts) {
  return Session(std::move(ag), opts);
}

Session Session::from_file(const std::string& path, const SessionOptions& opts,
                           std::ostream& out) {
  AgentFileOptions fopts;
  fopts.conjunctive_strict = opts.conjunctive_strict;
  AgentProgram ag = load_agent_file(path, fopts);
  CoherenceReport rep = is_coherent(ag);
  if (!rep.coherent()) {
    if (!opts.permissive)
      throw IncoherentProgram("agent file violates coherence: " +
                              rep.summary());
    out << "warning: program incoherent (" << rep.summary() << ")\n";
  }
  return Session(std::move(ag), opts);
}

int Session::run_command(const std::string& line, std::ostream& out) {
  auto [cmd, rest] = split_word(line);
  try {
    if (cmd.empty()) return kOk;
    if (cmd == "query") return cmd_query(rest, out);
    if (cmd == "apply") return cmd_apply(rest, out);
    if (cmd == "coherence") return cmd_coherence(out);
    if (cmd == "model") return cmd_model(rest, out);
    if (cmd == "oracle") return cmd_oracle(rest, out);
    if (cmd == "history") {
      for (std::size_t i = 0; i < history_.size(); ++i)
        out << i + 1 << ": " << history_[i] << '\n';
      return kOk;
    }
    if (cmd == "reset") {
      current_ = initial_;
      history_.clear();
      out << "ok\n";
      return kOk;
    }
    if (cmd == "help") {
      out << "commands: query <K|B|G|I> <formula>\n"
             "          apply <announce|reviseB|reviseD|contractB|contractD> "
             "<formula>\n"
             "          coherence | model dump | model export <path>\n"
             "          oracle verify [--ops N] [--symbols K] [--seed S]\n"
             "          history | reset | help\n";
      return kOk;
    }
    out << "error: unknown command '" << cmd << "'\n";
    return kUsage;
  } catch (const ParseError& e) {
    out << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const IncoherentProgram& e) {
    out << "error: " << e.what() << '\n';
    return kCoherenceViolation;
  } catch (const Error& e) {
    out << "error: " << e.what() << '\n';
    return kParseError;
  }
}

int Session::cmd_query(const std::string& rest, std::ostream& out) {
  auto [att_tok, formula_text] = split_word(rest);
  auto attitude = attitude_from(att_tok);
  if (!attitude) {
    out << "error: attitude must be one of K B G I\n";
    return kUsage;
  }
  FormulaPtr f = parse_formula(strip_quotes(formula_text), current_.vocab,
                               current_.library);
  out << (query(current_, *attitude, to_dnf(f)) ? "true" : "false") << '\n';
  return kOk;
}

int Session::cmd_apply(const std::string& rest, std::ostream& out) {
  auto [op, formula_text] = split_word(rest);
  const std::string text = strip_quotes(formula_text);
  FormulaPtr f = parse_formula(text, current_.vocab, current_.library);

  DynamicsOptions dyn;
  dyn.permissive = opts_.permissive;
  dyn.strict_filter = opts_.strict_intentions;

  AgentProgram next;
  if (op == "announce")
    next = announce(current_, to_conj_clause(f), dyn);
  else if (op == "reviseB")
    next = revise_belief(current_, to_conj_clause(f), dyn);
  else if (op == "reviseD")
    next = revise_desire(current_, to_conj_clause(f), dyn);
  else if (op == "contractB")
    next = contract_belief(current_, to_dnf(f), dyn);
  else if (op == "contractD")
    next = contract_desire(current_, to_dnf(f), dyn);
  else {
    out << "error: unknown operation '" << op << "'\n";
    return kUsage;
  }
  current_ = std::move(next);
  history_.push_back("apply " + op + " " + text);
  out << "ok\n";
  warn_if_incoherent(current_, out);
  return kOk;
}

int Session::cmd_coherence(std::ostream& out) {
  CoherenceReport rep = is_coherent(current_);
  int index = 1;
  for (const auto& [name, ok] : rep.conditions())
    out << index++ << ' ' << name << ": " << (ok ? "pass" : "fail") << '\n';
  out << "coherent: " << (rep.coherent() ? "yes" : "no") << '\n';
  return rep.coherent() ? kOk : kCoherenceViolation;
}

int Session::cmd_model(const std::string& rest, std::ostream& out) {
  auto [sub, path] = split_word(rest);
  AgentModel m = induced_model(current_, opts_.world_cap_symbols);
  if (sub == "dump") {
    dump_model(m, out);
    return kOk;
  }
  if (sub == "export") {
    if (path.empty()) {
      out << "error: model export needs a path\n";
      return kUsage;
    }
    std::ofstream file(strip_quotes(path));
    if (!file) {
      out << "error: cannot write '" << path << "'\n";
      return kUsage;
    }
    export_dot(m, file);
    out << "ok\n";
    return kOk;
  }
  out << "error: model subcommand must be dump or export\n";
  return kUsage;
}

int Session::cmd_oracle(const std::string& rest, std::ostream& out) {
  std::istringstream is(rest);
  std::string sub;
  is >> sub;
  if (sub != "verify") {
    out << "error: oracle subcommand must be verify\n";
    return kUsage;
  }
  int ops = 200;
  GeneratorOptions gen;
  std::uint64_t seed = 0;
  std::string flag;
  while (is >> flag) {
    auto need_value = [&](int& dst) {
      int v;
      if (!(is >> v)) throw Error("flag " + flag + " needs a value");
      dst = v;
    };
    if (flag == "--ops") {
      need_value(ops);
    } else if (flag == "--symbols") {
      need_value(gen.symbols);
    } else if (flag == "--seed") {
      long long v;
      if (!(is >> v)) throw Error("flag --seed needs a value");
      seed = static_cast<std::uint64_t>(v);
    } else {
      out << "error: unknown flag '" << flag << "'\n";
      return kUsage;
    }
  }

  DynamicsOptions dyn;
  dyn.permissive = opts_.permissive;
  dyn.strict_filter = opts_.strict_intentions;
  OracleReport report = verify_operations(ops, gen, seed, dyn);
  out << "oracle verify: ops=" << ops << " symbols=" << gen.symbols
      << " seed=" << seed
      << " filter=" << (dyn.strict_filter ? "strict" : "verbatim") << '\n';
  for (const auto& [op, counts] : report.per_op)
    out << "  " << to_string(op) << ": " << counts.first << '/' << counts.second
        << " agree\n";
  out << "total: " << report.agreements << '/' << report.trials << " agree\n";
  if (report.first_mismatch) {
    out << "counterexample:\n";
    describe_trial(*report.first_mismatch, out);
    return kOracleCounterexample;
  }
  out << "ok\n";
  return kOk;
}

}  // namespace dpl
