#include "dpl/semantics.hpp"

#include <algorithm>
#include <functional>

#include "dpl/sugar.hpp"

namespace dpl {

namespace {

const Preorder& order_of(const AgentModel& m, OrderKind kind) {
  return kind == OrderKind::Plausibility ? m.plausibility : m.desirability;
}

Preorder& order_of(AgentModel& m, OrderKind kind) {
  return kind == OrderKind::Plausibility ? m.plausibility : m.desirability;
}

std::size_t position_of(const AgentModel& m, int world_id) {
  auto pos = m.index_of(world_id);
  if (!pos) throw UnknownWorld("unknown world id: " + std::to_string(world_id));
  return *pos;
}

bool world_atom(const AgentModel& m, std::size_t pos, const std::string& sym) {
  auto idx = m.vocab.index_of(sym);
  if (!idx) throw Error("symbol outside the model vocabulary: '" + sym + "'");
  return m.worlds[pos].valuation[*idx];
}

bool eval_at(const AgentModel& m, std::size_t pos, const FormulaPtr& f);

bool eval_box(const AgentModel& m, std::size_t pos, const FormulaPtr& f) {
  const bool strict = f->op() == Op::BoxLtP || f->op() == Op::BoxLtD;
  const Preorder& order =
      (f->op() == Op::BoxLeqP || f->op() == Op::BoxLtP) ? m.plausibility
                                                        : m.desirability;
  for (std::size_t w = 0; w < m.worlds.size(); ++w) {
    const bool related = strict ? order.lt(w, pos) : order.leq(w, pos);
    if (related && !eval_at(m, w, f->child())) return false;
  }
  return true;
}

bool eval_dynamic(const AgentModel& m, std::size_t pos, const FormulaPtr& f) {
  const int id = m.worlds[pos].id;
  AgentModel next;
  switch (f->op()) {
    case Op::DynAnnounce: next = announce_model(m, f->dyn_arg()); break;
    case Op::DynUpgradeP:
      next = upgrade_model(m, OrderKind::Plausibility, f->dyn_arg());
      break;
    case Op::DynUpgradeD:
      next = upgrade_model(m, OrderKind::Desirability, f->dyn_arg());
      break;
    case Op::DynContractP:
      next = contract_model(m, OrderKind::Plausibility, f->dyn_arg());
      break;
    case Op::DynContractD:
      next = contract_model(m, OrderKind::Desirability, f->dyn_arg());
      break;
    default: throw Error("not a dynamic operator");
  }
  auto surviving = next.index_of(id);
  if (!surviving) return true;  // deleted worlds satisfy the box vacuously
  return eval_at(next, *surviving, f->dyn_body());
}

bool eval_at(const AgentModel& m, std::size_t pos, const FormulaPtr& f) {
  switch (f->op()) {
    case Op::Atom: return world_atom(m, pos, f->label());
    case Op::Top: return true;
    case Op::Bot: return false;
    case Op::Not: return !eval_at(m, pos, f->child());
    case Op::And:
      return eval_at(m, pos, f->left()) && eval_at(m, pos, f->right());
    case Op::Or:
      return eval_at(m, pos, f->left()) || eval_at(m, pos, f->right());
    case Op::Univ:
      for (std::size_t w = 0; w < m.worlds.size(); ++w)
        if (!eval_at(m, w, f->child())) return false;
      return true;
    case Op::BoxLeqP:
    case Op::BoxLtP:
    case Op::BoxLeqD:
    case Op::BoxLtD:
      return eval_box(m, pos, f);
    case Op::PlanBox: {
      const Plan& p = m.library.plan(f->label());
      if (!eval_at(m, pos, p.pre)) return true;
      AgentModel next = execute_plan(m, f->label());
      return eval_at(next, *next.index_of(m.worlds[pos].id), f->child());
    }
    case Op::IntendsPlan:
      return m.intentions.count(f->label()) > 0;
    case Op::DynAnnounce:
    case Op::DynUpgradeP:
    case Op::DynUpgradeD:
    case Op::DynContractP:
    case Op::DynContractD:
      return eval_dynamic(m, pos, f);
  }
  throw Error("unreachable formula operator");
}

void assert_preorder(const Preorder& order, const char* who) {
  if (!order.is_preorder())
    throw ResultNotPreorder(std::string(who) +
                            " produced a relation that is not a preorder");
}

}  // namespace

bool evaluate(const AgentModel& m, int world_id, const FormulaPtr& f) {
  return eval_at(m, position_of(m, world_id), f);
}

bool model_satisfies(const AgentModel& m, const FormulaPtr& f) {
  for (std::size_t w = 0; w < m.worlds.size(); ++w)
    if (!eval_at(m, w, f)) return false;
  return true;
}

std::vector<int> extension(const AgentModel& m, const FormulaPtr& f) {
  std::vector<int> out;
  for (std::size_t w = 0; w < m.worlds.size(); ++w)
    if (eval_at(m, w, f)) out.push_back(m.worlds[w].id);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> min_worlds(const AgentModel& m, OrderKind kind,
                            const std::vector<int>& ids) {
  const Preorder& order = order_of(m, kind);
  std::vector<std::size_t> positions;
  for (int id : ids) positions.push_back(position_of(m, id));
  std::vector<int> out;
  for (std::size_t i : positions) {
    bool minimal = true;
    for (std::size_t j : positions)
      if (order.leq(j, i) && !order.leq(i, j)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(m.worlds[i].id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

AgentModel execute_plan(const AgentModel& m, const std::string& plan) {
  const Plan& p = m.library.plan(plan);
  std::vector<std::size_t> keep;
  for (std::size_t w = 0; w < m.worlds.size(); ++w)
    if (eval_at(m, w, p.pre)) keep.push_back(w);

  AgentModel out;
  out.vocab = m.vocab;
  out.library = m.library;
  out.intentions = m.intentions;
  for (std::size_t w : keep) {
    World nw = m.worlds[w];
    for (const Literal& l : p.post) {
      auto idx = out.vocab.index_of(l.symbol);
      if (!idx)
        throw Error("postcondition symbol outside the model vocabulary: '" +
                    l.symbol + "'");
      nw.valuation[*idx] = l.positive;
    }
    out.worlds.push_back(std::move(nw));
  }
  out.plausibility = m.plausibility.restricted_to(keep);
  out.desirability = m.desirability.restricted_to(keep);
  return out;
}

AgentModel announce_model(const AgentModel& m, const FormulaPtr& fact) {
  std::vector<std::size_t> keep;
  for (std::size_t w = 0; w < m.worlds.size(); ++w)
    if (eval_at(m, w, fact)) keep.push_back(w);

  AgentModel out;
  out.vocab = m.vocab;
  out.library = m.library;
  for (std::size_t w : keep) out.worlds.push_back(m.worlds[w]);
  out.plausibility = m.plausibility.restricted_to(keep);
  out.desirability = m.desirability.restricted_to(keep);
  out.intentions = m.intentions;
  out.intentions = max_coherent_intentions(out);
  return out;
}

AgentModel upgrade_model(const AgentModel& m, OrderKind kind,
                         const FormulaPtr& fact) {
  std::vector<bool> sat(m.worlds.size());
  for (std::size_t w = 0; w < m.worlds.size(); ++w) sat[w] = eval_at(m, w, fact);

  AgentModel out = m;
  Preorder& order = order_of(out, kind);
  const Preorder& old = order_of(m, kind);
  for (std::size_t i = 0; i < m.worlds.size(); ++i)
    for (std::size_t j = 0; j < m.worlds.size(); ++j) {
      bool v = old.leq(i, j);
      if (!sat[i] && sat[j]) v = false;
      if (sat[i] && !sat[j]) v = true;
      order.set(i, j, v);
    }
  assert_preorder(order, "radical upgrade");
  out.intentions = max_coherent_intentions(out);
  return out;
}

namespace {

// Longest strict chain from a minimal member of `inside` to `pos`, within
// `inside`. The strict part of a finite preorder is acyclic, so plain
// memoized recursion terminates.
int longest_chain(const Preorder& order, const std::vector<bool>& inside,
                  std::size_t pos, std::vector<int>& memo) {
  if (memo[pos] >= 0) return memo[pos];
  int best = 0;
  for (std::size_t w = 0; w < inside.size(); ++w)
    if (inside[w] && order.lt(w, pos))
      best = std::max(best, 1 + longest_chain(order, inside, w, memo));
  memo[pos] = best;
  return best;
}

}  // namespace

int plausibility_degree(const AgentModel& m, OrderKind kind,
                        const FormulaPtr& f, int world_id) {
  const std::size_t pos = position_of(m, world_id);
  std::vector<bool> inside(m.worlds.size());
  for (std::size_t w = 0; w < m.worlds.size(); ++w) inside[w] = eval_at(m, w, f);
  if (!inside[pos])
    throw WorldOutsideExtension("world w" + std::to_string(world_id) +
                                " does not satisfy " + print_formula(f));
  std::vector<int> memo(m.worlds.size(), -1);
  return longest_chain(order_of(m, kind), inside, pos, memo);
}

AgentModel contract_model(const AgentModel& m, OrderKind kind,
                          const FormulaPtr& fact) {
  const std::size_t n = m.worlds.size();
  std::vector<bool> sat(n);
  for (std::size_t w = 0; w < n; ++w) sat[w] = eval_at(m, w, fact);
  std::vector<bool> unsat(n);
  for (std::size_t w = 0; w < n; ++w) unsat[w] = !sat[w];

  const Preorder& old = order_of(m, kind);
  std::vector<int> memo_in(n, -1), memo_out(n, -1);
  auto degree_in = [&](std::size_t w) {
    return longest_chain(old, sat, w, memo_in);
  };
  auto degree_out = [&](std::size_t w) {
    return longest_chain(old, unsat, w, memo_out);
  };

  AgentModel out = m;
  Preorder& order = order_of(out, kind);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bool v;
      if (sat[i] == sat[j])
        v = old.leq(i, j);
      else if (sat[i])
        v = degree_in(i) < degree_out(j);
      else
        v = degree_out(i) < degree_in(j);
      order.set(i, j, v);
    }
  order.close_reflexive_transitive();
  assert_preorder(order, "lexicographic contraction");
  out.intentions = max_coherent_intentions(out);
  return out;
}

std::set<std::string> max_coherent_intentions(const AgentModel& m) {
  std::set<std::string> kept;
  for (const std::string& name : m.intentions) {
    const Plan& p = m.library.plan(name);
    if (!model_satisfies(m, enc::belief(p.pre))) continue;
    if (!model_satisfies(m, enc::admissible_intention(clause_to_formula(p.post))))
      continue;
    kept.insert(name);
  }
  return kept;
}

bool is_coherent_model(const AgentModel& m) {
  return max_coherent_intentions(m) == m.intentions;
}

Preorder induced_order(const StratifiedBase& base, const Vocabulary& vocab,
                       const std::vector<World>& worlds) {
  const std::vector<int> ranks = base.ranks();
  const std::size_t n = worlds.size();

  // sat[w][k]: world w satisfies every formula of the k-th occurring rank.
  std::vector<std::vector<bool>> sat(n, std::vector<bool>(ranks.size(), true));
  for (std::size_t k = 0; k < ranks.size(); ++k) {
    const std::vector<FormulaPtr> stratum = base.stratum(ranks[k]);
    for (std::size_t w = 0; w < n; ++w) {
      auto val = [&](const std::string& sym) {
        auto idx = vocab.index_of(sym);
        if (!idx) throw Error("symbol outside the vocabulary: '" + sym + "'");
        return static_cast<bool>(worlds[w].valuation[*idx]);
      };
      for (const FormulaPtr& f : stratum)
        if (!eval_prop(f, val)) {
          sat[w][k] = false;
          break;
        }
    }
  }

  Preorder out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bool leq = true;
      bool separated_earlier = false;  // some earlier stratum holds at i only
      for (std::size_t k = 0; k < ranks.size(); ++k) {
        if (!(!sat[j][k] || sat[i][k]) && !separated_earlier) {
          leq = false;
          break;
        }
        separated_earlier = separated_earlier || (sat[i][k] && !sat[j][k]);
      }
      out.set(i, j, leq);
    }
  return out;
}

AgentModel induced_model(const AgentProgram& ag, int world_cap_symbols) {
  const std::size_t nsym = ag.vocab.size();
  if (nsym > static_cast<std::size_t>(world_cap_symbols))
    throw VocabularyTooLarge("vocabulary of " + std::to_string(nsym) +
                             " symbols exceeds the world cap of " +
                             std::to_string(world_cap_symbols));

  AgentModel out;
  out.vocab = ag.vocab;
  out.library = ag.library;
  out.intentions = ag.intentions;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nsym); ++mask) {
    std::vector<bool> valuation(nsym);
    for (std::size_t i = 0; i < nsym; ++i) valuation[i] = (mask >> i) & 1;
    auto val = [&](const std::string& sym) {
      auto idx = ag.vocab.index_of(sym);
      if (!idx) throw Error("symbol outside the vocabulary: '" + sym + "'");
      return static_cast<bool>(valuation[*idx]);
    };
    bool ok = true;
    for (const FormulaPtr& f : ag.knowledge)
      if (!eval_prop(f, val)) {
        ok = false;
        break;
      }
    if (ok)
      out.worlds.push_back(
          {static_cast<int>(out.worlds.size()), std::move(valuation)});
  }
  out.plausibility = induced_order(ag.beliefs, ag.vocab, out.worlds);
  out.desirability = induced_order(ag.desires, ag.vocab, out.worlds);
  return out;
}

namespace {

FormulaPtr world_description(const Vocabulary& vocab, const World& w) {
  ConjClause clause;
  for (std::size_t i = 0; i < vocab.size(); ++i)
    clause.add({vocab.symbol(i), static_cast<bool>(w.valuation[i])});
  return clause_to_formula(clause);
}

// Rank levels of a total preorder: the longest strict chain below each world.
std::vector<int> rank_levels(const Preorder& order) {
  std::vector<int> memo(order.size(), -1);
  std::vector<bool> all(order.size(), true);
  std::vector<int> out(order.size());
  for (std::size_t w = 0; w < order.size(); ++w)
    out[w] = longest_chain(order, all, w, memo);
  return out;
}

StratifiedBase base_for_order(const AgentModel& m, const Preorder& order) {
  const std::vector<int> levels = rank_levels(order);
  const int max_level =
      levels.empty() ? 0 : *std::max_element(levels.begin(), levels.end());
  StratifiedBase out;
  for (int level = 0; level < max_level; ++level) {
    // Disjunction of the descriptions of all worlds of rank <= level.
    FormulaPtr stratum;
    for (std::size_t w = 0; w < m.worlds.size(); ++w) {
      if (levels[w] > level) continue;
      FormulaPtr desc = world_description(m.vocab, m.worlds[w]);
      stratum = stratum ? Formula::lor(std::move(stratum), std::move(desc))
                        : std::move(desc);
    }
    out.add(std::move(stratum), level + 1);
  }
  return out;
}

}  // namespace

AgentProgram extract_program(const AgentModel& m) {
  if (!m.plausibility.is_total() || !m.desirability.is_total())
    throw NotRanked("extraction needs total (ranked) preorders");
  {
    std::set<std::vector<bool>> seen;
    for (const World& w : m.worlds)
      if (!seen.insert(w.valuation).second)
        throw Error("extraction needs duplicate-free world valuations");
  }

  AgentProgram out;
  out.vocab = m.vocab;
  out.library = m.library;
  out.intentions = m.intentions;

  if (m.worlds.empty()) {
    out.knowledge.push_back(Formula::bot());
  } else if (m.worlds.size() < (std::size_t{1} << m.vocab.size())) {
    FormulaPtr pin;
    for (const World& w : m.worlds) {
      FormulaPtr desc = world_description(m.vocab, w);
      pin = pin ? Formula::lor(std::move(pin), std::move(desc))
                : std::move(desc);
    }
    out.knowledge.push_back(std::move(pin));
  }  // complete world set: the empty knowledge set already pins it

  out.beliefs = base_for_order(m, m.plausibility);
  out.desires = base_for_order(m, m.desirability);

  if (!models_equal(induced_model(out, static_cast<int>(m.vocab.size())), m))
    throw Error("extraction round-trip failed");
  return out;
}

}  // namespace dpl
