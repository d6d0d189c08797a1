#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "dpl/agent_file.hpp"
#include "dpl/dynamics.hpp"
#include "dpl/program.hpp"

namespace dpl {

/// Process exit codes shared by the command loop.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParseError = 2,
  kCoherenceViolation = 3,
  kOracleCounterexample = 4,
};

struct SessionOptions {
  bool permissive = false;          // incoherent programs warn instead of fail
  bool strict_intentions = false;   // uniform admissibility intention filter
  bool conjunctive_strict = true;   // loader requires conjunctive formulas
  int world_cap_symbols = 16;
};

/// One loaded agent plus a replayable history of applied operations.
class Session {
 public:
  static Session from_file(const std::string& path, const SessionOptions& opts,
                           std::ostream& out);
  static Session from_program(AgentProgram ag, const SessionOptions& opts);

  /// Executes one command line; output goes to `out`. Returns an ExitCode
  /// (kOk when the command succeeded).
  int run_command(const std::string& line, std::ostream& out);

  const AgentProgram& current() const { return current_; }
  const AgentProgram& initial() const { return initial_; }
  const std::vector<std::string>& history() const { return history_; }
  const SessionOptions& options() const { return opts_; }

 private:
  Session(AgentProgram ag, const SessionOptions& opts);

  int cmd_query(const std::string& rest, std::ostream& out);
  int cmd_apply(const std::string& rest, std::ostream& out);
  int cmd_coherence(std::ostream& out);
  int cmd_model(const std::string& rest, std::ostream& out);
  int cmd_oracle(const std::string& rest, std::ostream& out);

  AgentProgram initial_;
  AgentProgram current_;
  std::vector<std::string> history_;
  SessionOptions opts_;
};

}  // namespace dpl
