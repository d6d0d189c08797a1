#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "dpl/dynamics.hpp"
#include "dpl/model.hpp"
#include "dpl/program.hpp"

namespace dpl {

/// Deterministic RNG wrapper; only raw engine output is used so sequences
/// are identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  std::size_t below(std::size_t n) { return n ? next() % n : 0; }
  bool chance(std::size_t num, std::size_t den) { return below(den) < num; }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

 private:
  std::mt19937_64 eng_;
};

struct GeneratorOptions {
  int symbols = 3;
  int max_extra_strata = 3;
  int max_formulas_per_stratum = 2;
  int max_clause_literals = 2;
  int max_plans = 3;
};

Vocabulary make_vocabulary(int symbols);

ConjClause random_clause(Rng& rng, const Vocabulary& vocab, int max_literals,
                         bool force_consistent, bool allow_empty);

DnfFormula random_dnf(Rng& rng, const Vocabulary& vocab, int max_clauses,
                      int max_literals);

/// Disjunction of literals over distinct symbols.
DnfFormula random_literal_disjunction(Rng& rng, const Vocabulary& vocab,
                                      int max_literals);

/// Random program passing all seven coherence conditions. Knowledge mirrors
/// into rank 0 of both bases by construction; intentions are repaired
/// against the per-plan conditions.
AgentProgram random_coherent_program(Rng& rng, const GeneratorOptions& g = {});

/// Consistent clause that is also consistent with the program's knowledge.
ConjClause random_announcement(Rng& rng, const AgentProgram& ag,
                               int max_literals);

enum class DynOp {
  Announce,
  ReviseBelief,
  ReviseDesire,
  ContractBelief,
  ContractDesire,
};

const char* to_string(DynOp op);

/// One program-versus-semantics commutation trial.
struct CommuteTrial {
  DynOp op = DynOp::Announce;
  AgentProgram input;
  std::string argument;  // printed operation argument
  bool models_match = false;
  AgentModel program_route;   // induced model of the transformed program
  AgentModel semantic_route;  // transformed induced model of the input
};

CommuteTrial run_commute_trial(Rng& rng, DynOp op, const GeneratorOptions& g,
                               const DynamicsOptions& mode);

struct OracleReport {
  int trials = 0;
  int agreements = 0;
  std::vector<std::pair<DynOp, std::pair<int, int>>> per_op;  // (agree, total)
  std::optional<CommuteTrial> first_mismatch;

  bool clean() const { return agreements == trials; }
};

/// Runs `trials` commutation checks round-robin over the five operations.
OracleReport verify_operations(int trials, const GeneratorOptions& g,
                               std::uint64_t seed, const DynamicsOptions& mode);

void describe_trial(const CommuteTrial& trial, std::ostream& os);

}  // namespace dpl
