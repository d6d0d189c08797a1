#pragma once

// Shared helpers for the test suites: truth-table oracles that stay
// independent of the engine's entailment and selection code paths, plus a
// generator for random formula trees.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "dpl/formula.hpp"
#include "dpl/model.hpp"
#include "dpl/oracle.hpp"
#include "dpl/parser.hpp"
#include "dpl/program.hpp"

namespace testing {

using dpl::ConjClause;
using dpl::DnfFormula;
using dpl::FormulaPtr;
using dpl::Literal;
using dpl::Vocabulary;

/// All total assignments over `symbols` as symbol->bool maps.
inline std::vector<std::map<std::string, bool>> all_assignments(
    const std::vector<std::string>& symbols) {
  std::vector<std::map<std::string, bool>> out;
  const std::size_t n = symbols.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::map<std::string, bool> a;
    for (std::size_t i = 0; i < n; ++i) a[symbols[i]] = (mask >> i) & 1;
    out.push_back(std::move(a));
  }
  return out;
}

inline bool holds(const Literal& l, const std::map<std::string, bool>& a) {
  return a.at(l.symbol) == l.positive;
}

inline bool satisfies(const ConjClause& c,
                      const std::map<std::string, bool>& a) {
  return std::all_of(c.begin(), c.end(),
                     [&](const Literal& l) { return holds(l, a); });
}

inline bool satisfies(const DnfFormula& d,
                      const std::map<std::string, bool>& a) {
  return std::any_of(d.clauses().begin(), d.clauses().end(),
                     [&](const ConjClause& c) { return satisfies(c, a); });
}

/// Truth-table entailment over an explicit symbol universe.
inline bool tt_entails(const ConjClause& facts, const DnfFormula& goal,
                       const std::vector<std::string>& universe) {
  for (const auto& a : all_assignments(universe)) {
    if (!satisfies(facts, a)) continue;
    if (!satisfies(goal, a)) return false;
  }
  return true;
}

/// Same truth function over the given universe.
inline bool tt_equivalent(const FormulaPtr& f, const DnfFormula& d,
                          const std::vector<std::string>& universe) {
  for (const auto& a : all_assignments(universe)) {
    auto val = [&](const std::string& s) { return a.at(s); };
    if (dpl::eval_prop(f, val) != satisfies(d, a)) return false;
  }
  return true;
}

/// Brute-force prioritized whole-stratum selection: scan strata in priority
/// order and keep each whole stratum iff it is jointly satisfiable with all
/// kept earlier strata (by truth table). Returns the union of the literals
/// of the kept strata.
inline ConjClause bf_prioritized_max(const dpl::StratifiedBase& base,
                                     const std::vector<std::string>& universe) {
  std::vector<ConjClause> kept_formulas;
  std::vector<Literal> kept_literals;
  for (int rank : base.ranks()) {
    std::vector<ConjClause> candidate = kept_formulas;
    std::vector<Literal> lits;
    for (const FormulaPtr& f : base.stratum(rank)) {
      ConjClause c = dpl::to_conj_clause(f);
      candidate.push_back(c);
      for (const Literal& l : c) lits.push_back(l);
    }
    bool satisfiable = false;
    for (const auto& a : all_assignments(universe)) {
      if (std::all_of(candidate.begin(), candidate.end(),
                      [&](const ConjClause& c) { return satisfies(c, a); })) {
        satisfiable = true;
        break;
      }
    }
    if (!satisfiable) continue;
    kept_formulas = std::move(candidate);
    for (const Literal& l : lits) kept_literals.push_back(l);
  }
  return ConjClause(std::move(kept_literals));
}

/// Valuation over `vocab` with exactly the listed symbols true.
inline std::vector<bool> valuation_of(const Vocabulary& vocab,
                                      const std::set<std::string>& true_atoms) {
  std::vector<bool> out(vocab.size());
  for (std::size_t i = 0; i < vocab.size(); ++i)
    out[i] = true_atoms.count(vocab.symbol(i)) > 0;
  return out;
}

/// Total preorder grouping worlds by ascending rank.
inline dpl::Preorder order_from_ranks(const std::vector<int>& ranks) {
  dpl::Preorder out(ranks.size());
  for (std::size_t i = 0; i < ranks.size(); ++i)
    for (std::size_t j = 0; j < ranks.size(); ++j)
      out.set(i, j, ranks[i] <= ranks[j]);
  return out;
}

/// Reflexive-transitive closure of the given pairs.
inline dpl::Preorder order_from_pairs(
    std::size_t n, const std::vector<std::pair<int, int>>& pairs) {
  dpl::Preorder out(n);
  for (const auto& [i, j] : pairs) out.set(i, j, true);
  out.close_reflexive_transitive();
  return out;
}

inline dpl::AgentModel make_model(
    const Vocabulary& vocab, const dpl::PlanLibrary& library,
    const std::vector<std::set<std::string>>& worlds,
    const dpl::Preorder& plausibility, const dpl::Preorder& desirability,
    const std::set<std::string>& intentions = {}) {
  dpl::AgentModel m;
  m.vocab = vocab;
  m.library = library;
  for (std::size_t i = 0; i < worlds.size(); ++i)
    m.worlds.push_back({static_cast<int>(i), valuation_of(vocab, worlds[i])});
  m.plausibility = plausibility;
  m.desirability = desirability;
  m.intentions = intentions;
  return m;
}

/// Random formula tree over the whole grammar; dynamic-modality arguments
/// stay propositional.
inline FormulaPtr random_ast(dpl::Rng& rng, const Vocabulary& vocab,
                             const dpl::PlanLibrary& plans, int depth,
                             bool propositional_only = false) {
  using dpl::Formula;
  using dpl::Op;
  const std::size_t leaf_kinds = 3;
  if (depth <= 0 || rng.chance(1, 4)) {
    switch (rng.below(leaf_kinds)) {
      case 0: return Formula::atom(vocab.symbol(rng.below(vocab.size())));
      case 1: return Formula::top();
      default: return Formula::bot();
    }
  }
  const std::size_t kinds = propositional_only ? 3 : (plans.empty() ? 10 : 12);
  auto sub = [&](bool prop = false) {
    return random_ast(rng, vocab, plans, depth - 1,
                      propositional_only || prop);
  };
  switch (rng.below(kinds)) {
    case 0: return Formula::lnot(sub());
    case 1: return Formula::land(sub(), sub());
    case 2: return Formula::lor(sub(), sub());
    case 3: return Formula::univ(sub());
    case 4: return Formula::box(Op::BoxLeqP, sub());
    case 5: return Formula::box(Op::BoxLtP, sub());
    case 6: return Formula::box(Op::BoxLeqD, sub());
    case 7: return Formula::box(Op::BoxLtD, sub());
    case 8: {
      static const Op dyn[] = {Op::DynAnnounce, Op::DynUpgradeP,
                               Op::DynUpgradeD, Op::DynContractP,
                               Op::DynContractD};
      return Formula::dynamic(dyn[rng.below(5)], sub(true), sub());
    }
    case 9:
      return Formula::lnot(sub());  // weight negation a little heavier
    case 10: {
      const dpl::Plan& p = plans.plans()[rng.below(plans.size())];
      return Formula::plan_box(p.name, sub());
    }
    default: {
      const dpl::Plan& p = plans.plans()[rng.below(plans.size())];
      return Formula::intends_plan(p.name);
    }
  }
}

}  // namespace testing
