#include <unistd.h>

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "dpl/session.hpp"

namespace {

int run_stream(dpl::Session& session, std::istream& in, bool prompt) {
  std::string line;
  int worst = dpl::kOk;
  if (prompt) std::cout << "> " << std::flush;
  while (std::getline(in, line)) {
    if (line == "quit" || line == "exit") break;
    int status = session.run_command(line, std::cout);
    if (status != dpl::kOk) {
      if (!prompt) return status;  // batch mode stops at the first failure
      worst = status;
    }
    if (prompt) std::cout << "> " << std::flush;
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stratified-base BDI mental-state engine"};
  std::string agent_path;
  std::string script_path;
  std::vector<std::string> commands;
  dpl::SessionOptions opts;

  app.add_option("agent", agent_path, "agent file to load")->required();
  app.add_option("--script", script_path, "run commands from a file");
  app.add_option("-c,--command", commands, "run one command (repeatable)");
  app.add_flag("--permissive", opts.permissive,
               "warn instead of failing on incoherent programs");
  app.add_flag("--strict-intentions", opts.strict_intentions,
               "uniform admissibility intention filter for apply/oracle");
  app.add_flag_callback(
      "--lax-conjunctive",
      [&opts]() { opts.conjunctive_strict = false; },
      "allow non-conjunctive formulas in the agent file");
  app.add_option("--world-cap", opts.world_cap_symbols,
                 "max vocabulary size for model construction");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return dpl::kUsage;
  }

  try {
    dpl::Session session = dpl::Session::from_file(agent_path, opts, std::cout);

    if (!commands.empty()) {
      for (const std::string& line : commands) {
        int status = session.run_command(line, std::cout);
        if (status != dpl::kOk) return status;
      }
      return dpl::kOk;
    }
    if (!script_path.empty()) {
      std::ifstream script(script_path);
      if (!script) {
        std::cerr << "error: cannot open script '" << script_path << "'\n";
        return dpl::kUsage;
      }
      return run_stream(session, script, /*prompt=*/false);
    }
    return run_stream(session, std::cin, isatty(fileno(stdin)) != 0);
  } catch (const dpl::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return dpl::kParseError;
  } catch (const dpl::IncoherentProgram& e) {
    std::cerr << "error: " << e.what() << '\n';
    return dpl::kCoherenceViolation;
  } catch (const dpl::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return dpl::kParseError;
  }
}
