#pragma once

#include <istream>
#include <ostream>
#include <string>

#include "dpl/program.hpp"

namespace dpl {

struct AgentFileOptions {
  /// Require every base formula and plan precondition to be a conjunction
  /// of literals (the fragment the engine's operations work on).
  bool conjunctive_strict = true;
};

/// Reads the line-oriented agent format:
///   vocab: p q r
///   plan name { pre: <formula>; post: <conj-formula> }
///   knowledge { <conj-formula> ; ... }
///   belief <rank> { <conj-formula> }
///   desire <rank> { <conj-formula> }
///   intend name
/// '#' starts a comment; each construct sits on one line.
AgentProgram read_agent(std::istream& in, const AgentFileOptions& opts = {});

AgentProgram load_agent_file(const std::string& path,
                             const AgentFileOptions& opts = {});

/// Canonical serialization; read_agent maps it back to an equal program.
void write_agent(const AgentProgram& ag, std::ostream& os);

std::string agent_to_string(const AgentProgram& ag);

}  // namespace dpl
