#include "dpl/oracle.hpp"

#include <algorithm>

#include "dpl/agent_file.hpp"
#include "dpl/entail.hpp"
#include "dpl/semantics.hpp"

namespace dpl {

Vocabulary make_vocabulary(int symbols) {
  static const std::vector<std::string> pool = {"p", "q", "r", "s",
                                                "t", "u", "v", "w"};
  if (symbols < 1 || symbols > static_cast<int>(pool.size()))
    throw Error("generator supports 1.." + std::to_string(pool.size()) +
                " symbols");
  return Vocabulary(std::vector<std::string>(pool.begin(),
                                             pool.begin() + symbols));
}

ConjClause random_clause(Rng& rng, const Vocabulary& vocab, int max_literals,
                         bool force_consistent, bool allow_empty) {
  const int lo = allow_empty ? 0 : 1;
  const int len = lo + static_cast<int>(rng.below(max_literals - lo + 1));
  ConjClause out;
  for (int i = 0; i < len; ++i) {
    Literal l{vocab.symbol(rng.below(vocab.size())), rng.chance(1, 2)};
    if (force_consistent && out.contains(l.negated())) continue;
    out.add(l);
  }
  return out;
}

DnfFormula random_dnf(Rng& rng, const Vocabulary& vocab, int max_clauses,
                      int max_literals) {
  const int n = 1 + static_cast<int>(rng.below(max_clauses));
  std::vector<ConjClause> clauses;
  for (int i = 0; i < n; ++i)
    clauses.push_back(random_clause(rng, vocab, max_literals,
                                    /*force_consistent=*/false,
                                    /*allow_empty=*/false));
  return DnfFormula(std::move(clauses));
}

DnfFormula random_literal_disjunction(Rng& rng, const Vocabulary& vocab,
                                      int max_literals) {
  const int n =
      1 + static_cast<int>(rng.below(std::min<std::size_t>(
              max_literals, vocab.size())));
  std::vector<std::size_t> indices(vocab.size());
  for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = i;
  std::vector<ConjClause> clauses;
  for (int i = 0; i < n; ++i) {
    std::size_t at = rng.below(indices.size());
    Literal l{vocab.symbol(indices[at]), rng.chance(1, 2)};
    indices.erase(indices.begin() + at);
    clauses.push_back(ConjClause({l}));
  }
  return DnfFormula(std::move(clauses));
}

namespace {

std::vector<ConjClause> split_into_clauses(Rng& rng, const ConjClause& lits) {
  std::vector<ConjClause> out;
  if (lits.empty()) return out;
  const int groups = 1 + static_cast<int>(rng.below(2));
  out.resize(groups);
  for (const Literal& l : lits) out[rng.below(groups)].add(l);
  std::erase_if(out, [](const ConjClause& c) { return c.empty(); });
  return out;
}

StratifiedBase random_base(Rng& rng, const Vocabulary& vocab,
                           const std::vector<ConjClause>& mirror,
                           const GeneratorOptions& g) {
  StratifiedBase out;
  for (const ConjClause& c : mirror) out.add(clause_to_formula(c), 0);
  const int extra = static_cast<int>(rng.below(g.max_extra_strata + 1));
  for (int rank = 1; rank <= extra; ++rank) {
    const int m =
        static_cast<int>(rng.below(g.max_formulas_per_stratum + 1));
    for (int i = 0; i < m; ++i) {
      // Occasionally internally inconsistent, which a stratum may be.
      bool consistent = !rng.chance(1, 8);
      out.add(clause_to_formula(random_clause(rng, vocab,
                                              g.max_clause_literals, consistent,
                                              /*allow_empty=*/false)),
              rank);
    }
  }
  return out;
}

}  // namespace

AgentProgram random_coherent_program(Rng& rng, const GeneratorOptions& g) {
  AgentProgram ag;
  ag.vocab = make_vocabulary(g.symbols);

  // Consistent knowledge kernel, sometimes empty.
  ConjClause kernel;
  if (!rng.chance(2, 5))
    kernel = random_clause(rng, ag.vocab, g.symbols,
                           /*force_consistent=*/true, /*allow_empty=*/true);
  const std::vector<ConjClause> k_clauses = split_into_clauses(rng, kernel);
  for (const ConjClause& c : k_clauses)
    ag.knowledge.push_back(clause_to_formula(c));

  ag.beliefs = random_base(rng, ag.vocab, k_clauses, g);
  ag.desires = random_base(rng, ag.vocab, k_clauses, g);

  static const std::vector<std::string> names = {"a", "b", "c", "d"};
  std::vector<PlanEntry> entries;
  const int plans = static_cast<int>(rng.below(g.max_plans + 1));
  for (int i = 0; i < plans; ++i) {
    FormulaPtr pre = clause_to_formula(random_clause(
        rng, ag.vocab, g.max_clause_literals, true, /*allow_empty=*/true));
    FormulaPtr post = clause_to_formula(random_clause(
        rng, ag.vocab, g.max_clause_literals, true, /*allow_empty=*/false));
    entries.push_back({names[i], std::move(pre), std::move(post)});
  }
  ag.library = PlanLibrary::make(entries);

  std::set<std::string> want;
  for (const Plan& p : ag.library.plans())
    if (rng.chance(1, 2)) want.insert(p.name);

  // Repair the intention set against the per-plan coherence conditions,
  // then against joint postcondition consistency.
  const ConjClause bmax = max_consistent(ag.beliefs);
  const ConjClause dmax = max_consistent(ag.desires);
  std::set<std::string> kept;
  ConjClause joint;
  for (const std::string& name : want) {
    const Plan& p = ag.library.plan(name);
    bool supported = std::any_of(dmax.begin(), dmax.end(), [&](const Literal& l) {
      return p.post.contains(l);
    });
    if (!supported) continue;
    if (!base_entails(bmax, to_dnf(p.pre))) continue;
    if (base_entails(bmax, DnfFormula({p.post}))) continue;
    if (!joint.consistent_with(p.post)) continue;
    joint = joint.united_with(p.post);
    kept.insert(name);
  }
  ag.intentions = std::move(kept);
  return ag;
}

ConjClause random_announcement(Rng& rng, const AgentProgram& ag,
                               int max_literals) {
  const ConjClause k_lits = knowledge_literals(ag);
  for (int attempt = 0; attempt < 64; ++attempt) {
    ConjClause c = random_clause(rng, ag.vocab, max_literals,
                                 /*force_consistent=*/true,
                                 /*allow_empty=*/true);
    if (k_lits.consistent_with(c)) return c;
  }
  return ConjClause{};  // announcing top is always admissible
}

const char* to_string(DynOp op) {
  switch (op) {
    case DynOp::Announce: return "announce";
    case DynOp::ReviseBelief: return "revise-belief";
    case DynOp::ReviseDesire: return "revise-desire";
    case DynOp::ContractBelief: return "contract-belief";
    case DynOp::ContractDesire: return "contract-desire";
  }
  return "?";
}

CommuteTrial run_commute_trial(Rng& rng, DynOp op, const GeneratorOptions& g,
                               const DynamicsOptions& mode) {
  CommuteTrial trial;
  trial.op = op;
  trial.input = random_coherent_program(rng, g);

  AgentProgram after;
  FormulaPtr semantic_arg;
  switch (op) {
    case DynOp::Announce: {
      ConjClause fact = random_announcement(rng, trial.input,
                                            g.max_clause_literals);
      trial.argument = to_string(fact);
      semantic_arg = clause_to_formula(fact);
      after = announce(trial.input, fact, mode);
      break;
    }
    case DynOp::ReviseBelief:
    case DynOp::ReviseDesire: {
      ConjClause fact = random_clause(rng, trial.input.vocab,
                                      g.max_clause_literals,
                                      /*force_consistent=*/true,
                                      /*allow_empty=*/true);
      trial.argument = to_string(fact);
      semantic_arg = clause_to_formula(fact);
      after = op == DynOp::ReviseBelief ? revise_belief(trial.input, fact, mode)
                                        : revise_desire(trial.input, fact, mode);
      break;
    }
    case DynOp::ContractBelief:
    case DynOp::ContractDesire: {
      DnfFormula goal = random_literal_disjunction(rng, trial.input.vocab, 2);
      trial.argument = to_string(goal);
      semantic_arg = dnf_to_formula(goal);
      after = op == DynOp::ContractBelief
                  ? contract_belief(trial.input, goal, mode)
                  : contract_desire(trial.input, goal, mode);
      break;
    }
  }

  const AgentModel before = induced_model(trial.input);
  switch (op) {
    case DynOp::Announce:
      trial.semantic_route = announce_model(before, semantic_arg);
      break;
    case DynOp::ReviseBelief:
      trial.semantic_route =
          upgrade_model(before, OrderKind::Plausibility, semantic_arg);
      break;
    case DynOp::ReviseDesire:
      trial.semantic_route =
          upgrade_model(before, OrderKind::Desirability, semantic_arg);
      break;
    case DynOp::ContractBelief:
      trial.semantic_route =
          contract_model(before, OrderKind::Plausibility, semantic_arg);
      break;
    case DynOp::ContractDesire:
      trial.semantic_route =
          contract_model(before, OrderKind::Desirability, semantic_arg);
      break;
  }
  trial.program_route = induced_model(after);
  trial.models_match = models_equal(trial.program_route, trial.semantic_route);
  return trial;
}

OracleReport verify_operations(int trials, const GeneratorOptions& g,
                               std::uint64_t seed, const DynamicsOptions& mode) {
  static const DynOp ops[] = {DynOp::Announce, DynOp::ReviseBelief,
                              DynOp::ReviseDesire, DynOp::ContractBelief,
                              DynOp::ContractDesire};
  Rng rng(seed);
  OracleReport report;
  for (const DynOp op : ops) report.per_op.push_back({op, {0, 0}});
  for (int i = 0; i < trials; ++i) {
    const DynOp op = ops[i % 5];
    CommuteTrial trial = run_commute_trial(rng, op, g, mode);
    ++report.trials;
    auto& slot = report.per_op[i % 5].second;
    ++slot.second;
    if (trial.models_match) {
      ++report.agreements;
      ++slot.first;
    } else if (!report.first_mismatch) {
      report.first_mismatch = std::move(trial);
    }
  }
  return report;
}

void describe_trial(const CommuteTrial& trial, std::ostream& os) {
  os << "operation: " << to_string(trial.op) << ' ' << trial.argument << '\n';
  os << "input program:\n" << agent_to_string(trial.input);
  os << "model via program transformation:\n";
  dump_model(trial.program_route, os);
  os << "model via semantic transformation:\n";
  dump_model(trial.semantic_route, os);
  os << "models " << (trial.models_match ? "match" : "differ") << '\n';
}

}  // namespace dpl
