#include "dpl/program.hpp"

#include <algorithm>

#include "dpl/entail.hpp"

namespace dpl {

void StratifiedBase::add(FormulaPtr formula, int rank) {
  if (rank < 0) throw Error("stratified base ranks must be naturals");
  if (contains(formula, rank)) return;
  entries_.push_back({std::move(formula), rank});
}

bool StratifiedBase::contains(const FormulaPtr& formula, int rank) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const RankedFormula& e) {
                       return e.rank == rank && equal(e.formula, formula);
                     });
}

std::vector<int> StratifiedBase::ranks() const {
  std::vector<int> out;
  for (const RankedFormula& e : entries_) out.push_back(e.rank);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<FormulaPtr> StratifiedBase::stratum(int rank) const {
  std::vector<FormulaPtr> out;
  for (const RankedFormula& e : entries_)
    if (e.rank == rank) out.push_back(e.formula);
  return out;
}

bool is_conjunctive(const AgentProgram& ag) {
  for (const FormulaPtr& f : ag.knowledge)
    if (!is_conjunctive_formula(f)) return false;
  for (const RankedFormula& e : ag.beliefs.entries())
    if (!is_conjunctive_formula(e.formula)) return false;
  for (const RankedFormula& e : ag.desires.entries())
    if (!is_conjunctive_formula(e.formula)) return false;
  for (const Plan& p : ag.library.plans())
    if (!is_conjunctive_formula(p.pre)) return false;
  return true;
}

void require_conjunctive(const AgentProgram& ag) {
  if (!is_conjunctive(ag))
    throw NotConjunctive("agent program is not in the conjunctive fragment");
}

ConjClause knowledge_literals(const AgentProgram& ag) {
  std::vector<Literal> lits;
  for (const FormulaPtr& f : ag.knowledge) collect_conj_literals(f, lits);
  return ConjClause(std::move(lits));
}

void add_knowledge(AgentProgram& ag, FormulaPtr formula) {
  for (const FormulaPtr& f : ag.knowledge)
    if (equal(f, formula)) return;
  ag.knowledge.push_back(std::move(formula));
}

ConjClause max_consistent(const StratifiedBase& base) {
  // Entries grouped by rank, ascending from the minimum occurring rank.
  std::vector<std::pair<int, const FormulaPtr*>> items;
  items.reserve(base.size());
  for (const RankedFormula& e : base.entries())
    items.emplace_back(e.rank, &e.formula);
  std::stable_sort(items.begin(), items.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<Literal> acc;
  std::vector<Literal> stratum;
  std::size_t i = 0;
  while (i < items.size()) {
    const int rank = items[i].first;
    stratum.clear();
    for (; i < items.size() && items[i].first == rank; ++i)
      collect_conj_literals(*items[i].second, stratum);
    std::sort(stratum.begin(), stratum.end());
    stratum.erase(std::unique(stratum.begin(), stratum.end()), stratum.end());

    bool skip = false;
    for (std::size_t k = 1; k < stratum.size() && !skip; ++k)
      if (stratum[k].symbol == stratum[k - 1].symbol &&
          stratum[k].positive != stratum[k - 1].positive)
        skip = true;  // stratum internally inconsistent
    for (std::size_t k = 0; k < stratum.size() && !skip; ++k)
      if (std::binary_search(acc.begin(), acc.end(), stratum[k].negated()))
        skip = true;  // conflicts with an earlier stratum
    if (skip) continue;

    std::size_t old = acc.size();
    for (const Literal& l : stratum)
      if (!std::binary_search(acc.begin(), acc.begin() + old, l))
        acc.push_back(l);
    std::sort(acc.begin(), acc.end());
  }
  return ConjClause(std::move(acc));
}

bool base_entails(const ConjClause& literals, const DnfFormula& goal) {
  if (!literals.is_consistent())
    throw InconsistentLiteralSet("literal set is inconsistent: " +
                                 to_string(literals));
  return entails(literals, goal);
}

std::optional<Attitude> attitude_from(std::string_view token) {
  if (token == "K") return Attitude::Knowledge;
  if (token == "B") return Attitude::Belief;
  if (token == "G") return Attitude::Goal;
  if (token == "I") return Attitude::Intention;
  return std::nullopt;
}

const char* to_string(Attitude a) {
  switch (a) {
    case Attitude::Knowledge: return "K";
    case Attitude::Belief: return "B";
    case Attitude::Goal: return "G";
    case Attitude::Intention: return "I";
  }
  return "?";
}

bool query(const AgentProgram& ag, Attitude attitude, const DnfFormula& goal) {
  require_conjunctive(ag);
  switch (attitude) {
    case Attitude::Knowledge:
      return base_entails(knowledge_literals(ag), goal);
    case Attitude::Belief:
      return base_entails(max_consistent(ag.beliefs), goal);
    case Attitude::Goal:
      return base_entails(max_consistent(ag.desires), goal);
    case Attitude::Intention: {
      if (!base_entails(max_consistent(ag.desires), goal)) return false;
      return std::any_of(ag.intentions.begin(), ag.intentions.end(),
                         [&](const std::string& name) {
                           return ag.library.post_entails(name, goal);
                         });
    }
  }
  throw Error("unreachable attitude");
}

bool CoherenceReport::coherent() const {
  for (const auto& [name, ok] : conditions())
    if (!ok) return false;
  return true;
}

std::array<std::pair<const char*, bool>, 7> CoherenceReport::conditions()
    const {
  return {{{"knowledge-consistency", knowledge_consistent},
           {"belief-knowledge-mirror", beliefs_mirror_knowledge},
           {"desire-knowledge-mirror", desires_mirror_knowledge},
           {"intention-desire-support", intentions_supported_by_desires},
           {"pursuable-plans", intended_plans_pursuable},
           {"intention-consistency", intended_posts_jointly_consistent},
           {"relevant-plans", intended_plans_relevant}}};
}

std::string CoherenceReport::summary() const {
  std::string out;
  for (const auto& [name, ok] : conditions()) {
    if (ok) continue;
    if (!out.empty()) out += ", ";
    out += name;
  }
  return out.empty() ? "coherent" : out;
}

namespace {

std::set<ConjClause> clause_set(const std::vector<FormulaPtr>& formulas) {
  std::set<ConjClause> out;
  for (const FormulaPtr& f : formulas) out.insert(to_conj_clause(f));
  return out;
}

}  // namespace

CoherenceReport is_coherent(const AgentProgram& ag) {
  require_conjunctive(ag);
  CoherenceReport rep;

  const ConjClause k_lits = knowledge_literals(ag);
  rep.knowledge_consistent = k_lits.is_consistent();

  const std::set<ConjClause> k_clauses = clause_set(ag.knowledge);
  rep.beliefs_mirror_knowledge = clause_set(ag.beliefs.stratum(0)) == k_clauses;
  rep.desires_mirror_knowledge = clause_set(ag.desires.stratum(0)) == k_clauses;

  const ConjClause bmax = max_consistent(ag.beliefs);
  const ConjClause dmax = max_consistent(ag.desires);

  rep.intentions_supported_by_desires = true;
  rep.intended_plans_pursuable = true;
  rep.intended_plans_relevant = true;
  ConjClause joint_post;
  bool joint_ok = true;
  for (const std::string& name : ag.intentions) {
    const Plan& p = ag.library.plan(name);
    // Some maximal-set literal is entailed by the postcondition.
    bool supported = std::any_of(dmax.begin(), dmax.end(), [&](const Literal& l) {
      return p.post.contains(l);
    });
    if (!supported) rep.intentions_supported_by_desires = false;
    if (!base_entails(bmax, to_dnf(p.pre))) rep.intended_plans_pursuable = false;
    if (base_entails(bmax, DnfFormula({p.post})))
      rep.intended_plans_relevant = false;
    joint_post = joint_post.united_with(p.post);
    joint_ok = joint_ok && joint_post.is_consistent();
  }
  rep.intended_posts_jointly_consistent = joint_ok;
  return rep;
}

}  // namespace dpl
