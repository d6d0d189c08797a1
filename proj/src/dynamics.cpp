#include "dpl/dynamics.hpp"

#include <algorithm>

#include "dpl/entail.hpp"

namespace dpl {

namespace {

void require_ready(const AgentProgram& ag, const DynamicsOptions& opts) {
  require_conjunctive(ag);
  if (opts.permissive) return;
  CoherenceReport rep = is_coherent(ag);
  if (!rep.coherent())
    throw IncoherentProgram("operation on incoherent program: " +
                            rep.summary());
}

void require_consistent_fact(const ConjClause& fact) {
  if (!fact.is_consistent())
    throw InconsistentFormula("operation argument is inconsistent: " +
                              to_string(fact));
}

DnfFormula pre_dnf(const Plan& p) { return to_dnf(p.pre); }

bool desire_relevant(const ConjClause& post, const ConjClause& dmax) {
  return std::any_of(dmax.begin(), dmax.end(),
                     [&](const Literal& l) { return post.contains(l); });
}

/// Uniform admissibility filter: pre believed, post fully desired, post
/// possible given knowledge, post not already believed.
std::set<std::string> filter_strict(const AgentProgram& result) {
  const ConjClause bmax = max_consistent(result.beliefs);
  const ConjClause dmax = max_consistent(result.desires);
  const ConjClause k_lits = knowledge_literals(result);
  std::set<std::string> kept;
  for (const std::string& name : result.intentions) {
    const Plan& p = result.library.plan(name);
    const DnfFormula post(std::vector<ConjClause>{p.post});
    if (!base_entails(bmax, pre_dnf(p))) continue;
    if (!base_entails(dmax, post)) continue;
    if (!k_lits.united_with(p.post).is_consistent()) continue;
    if (base_entails(bmax, post)) continue;
    kept.insert(name);
  }
  return kept;
}

/// Filter on the revised beliefs only: pre believed, post not believed.
std::set<std::string> filter_beliefs(const AgentProgram& result) {
  const ConjClause bmax = max_consistent(result.beliefs);
  std::set<std::string> kept;
  for (const std::string& name : result.intentions) {
    const Plan& p = result.library.plan(name);
    if (!base_entails(bmax, pre_dnf(p))) continue;
    if (base_entails(bmax, DnfFormula(std::vector<ConjClause>{p.post})))
      continue;
    kept.insert(name);
  }
  return kept;
}

/// Belief filter plus relevance against the new maximal desire set.
std::set<std::string> filter_beliefs_and_desires(const AgentProgram& result) {
  const ConjClause bmax = max_consistent(result.beliefs);
  const ConjClause dmax = max_consistent(result.desires);
  std::set<std::string> kept;
  for (const std::string& name : result.intentions) {
    const Plan& p = result.library.plan(name);
    if (!base_entails(bmax, pre_dnf(p))) continue;
    if (base_entails(bmax, DnfFormula(std::vector<ConjClause>{p.post})))
      continue;
    if (!desire_relevant(p.post, dmax)) continue;
    kept.insert(name);
  }
  return kept;
}

}  // namespace

AgentProgram announce(const AgentProgram& ag, const ConjClause& fact,
                      const DynamicsOptions& opts) {
  require_ready(ag, opts);
  const ConjClause k_lits = knowledge_literals(ag);
  if (!fact.is_consistent() || !k_lits.consistent_with(fact))
    throw InconsistentAnnouncement(
        "announcement would empty the epistemic state: " + to_string(fact));

  AgentProgram out = ag;
  const FormulaPtr f = clause_to_formula(fact);
  add_knowledge(out, f);
  out.beliefs.add(f, 0);
  out.desires.add(f, 0);
  out.intentions =
      opts.strict_filter ? filter_strict(out) : filter_beliefs_and_desires(out);
  return out;
}

AgentProgram revise_belief(const AgentProgram& ag, const ConjClause& fact,
                           const DynamicsOptions& opts) {
  require_ready(ag, opts);
  require_consistent_fact(fact);

  AgentProgram out = ag;
  StratifiedBase revised;
  for (const FormulaPtr& f : ag.knowledge) revised.add(f, 0);
  revised.add(clause_to_formula(fact), 1);
  for (const RankedFormula& e : ag.beliefs.entries())
    revised.add(e.formula, e.rank + 2);
  out.beliefs = std::move(revised);
  out.intentions = opts.strict_filter ? filter_strict(out) : filter_beliefs(out);
  return out;
}

AgentProgram revise_desire(const AgentProgram& ag, const ConjClause& fact,
                           const DynamicsOptions& opts) {
  require_ready(ag, opts);
  require_consistent_fact(fact);

  AgentProgram out = ag;
  StratifiedBase revised;
  for (const FormulaPtr& f : ag.knowledge) revised.add(f, 0);
  revised.add(clause_to_formula(fact), 1);
  for (const RankedFormula& e : ag.desires.entries())
    revised.add(e.formula, e.rank + 2);
  out.desires = std::move(revised);
  out.intentions =
      opts.strict_filter ? filter_strict(out) : filter_beliefs_and_desires(out);
  return out;
}

StratifiedBase cont_base(const StratifiedBase& base, const DnfFormula& goal) {
  for (const ConjClause& c : goal.clauses())
    if (c.size() != 1)
      throw NotLiteralDisjunction(
          "contraction argument must be a disjunction of literals: " +
          to_string(goal));
  const std::vector<std::string> cleared = goal.symbols();

  StratifiedBase out;
  for (const RankedFormula& e : base.entries()) {
    const ConjClause clause = to_conj_clause(e.formula);
    std::vector<Literal> kept;
    for (const Literal& l : clause)
      if (!std::binary_search(cleared.begin(), cleared.end(), l.symbol))
        kept.push_back(l);
    out.add(clause_to_formula(ConjClause(std::move(kept))), e.rank);
  }
  return out;
}

AgentProgram contract_belief(const AgentProgram& ag, const DnfFormula& goal,
                             const DynamicsOptions& opts) {
  require_ready(ag, opts);
  AgentProgram out = ag;
  out.beliefs = cont_base(ag.beliefs, goal);
  out.intentions = opts.strict_filter ? filter_strict(out) : filter_beliefs(out);
  return out;
}

AgentProgram contract_desire(const AgentProgram& ag, const DnfFormula& goal,
                             const DynamicsOptions& opts) {
  require_ready(ag, opts);
  AgentProgram out = ag;
  out.desires = cont_base(ag.desires, goal);
  out.intentions =
      opts.strict_filter ? filter_strict(out) : filter_beliefs_and_desires(out);
  return out;
}

}  // namespace dpl
