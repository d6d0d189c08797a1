#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dpl/formula.hpp"
#include "dpl/literal.hpp"
#include "dpl/plan_library.hpp"
#include "dpl/vocabulary.hpp"

namespace dpl {

/// Formula tagged with a priority rank; rank 0 is the highest priority
/// (knowledge level).
struct RankedFormula {
  FormulaPtr formula;
  int rank = 0;
};

/// Finite set of ranked propositional formulas. Entries keep insertion
/// order; structural duplicates at the same rank are collapsed.
class StratifiedBase {
 public:
  StratifiedBase() = default;

  explicit StratifiedBase(std::vector<RankedFormula> entries) {
    for (RankedFormula& e : entries) add(std::move(e.formula), e.rank);
  }

  void add(FormulaPtr formula, int rank);
  bool contains(const FormulaPtr& formula, int rank) const;

  const std::vector<RankedFormula>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  /// Distinct ranks in ascending order.
  std::vector<int> ranks() const;
  std::vector<FormulaPtr> stratum(int rank) const;

 private:
  std::vector<RankedFormula> entries_;
};

/// Syntactic mental state: knowledge set, stratified belief and desire
/// bases, and adopted plans.
struct AgentProgram {
  Vocabulary vocab;
  PlanLibrary library;
  std::vector<FormulaPtr> knowledge;
  StratifiedBase beliefs;
  StratifiedBase desires;
  std::set<std::string> intentions;
};

/// Every base formula and plan condition is a conjunction of literals.
bool is_conjunctive(const AgentProgram& ag);
void require_conjunctive(const AgentProgram& ag);

/// Union of the literals of all knowledge formulas (conjunctive mode).
ConjClause knowledge_literals(const AgentProgram& ag);

void add_knowledge(AgentProgram& ag, FormulaPtr formula);

/// Prioritized maximal consistent literal set of a conjunctive base.
/// Strata are visited in ascending rank starting at the minimum occurring
/// rank; each stratum's literals stand or fall together.
ConjClause max_consistent(const StratifiedBase& base);

/// Exact entailment from a consistent literal set.
bool base_entails(const ConjClause& literals, const DnfFormula& goal);

enum class Attitude { Knowledge, Belief, Goal, Intention };

std::optional<Attitude> attitude_from(std::string_view token);
const char* to_string(Attitude a);

bool query(const AgentProgram& ag, Attitude attitude, const DnfFormula& goal);

/// Per-condition result of the mental-state coherence check.
struct CoherenceReport {
  bool knowledge_consistent = false;
  bool beliefs_mirror_knowledge = false;
  bool desires_mirror_knowledge = false;
  bool intentions_supported_by_desires = false;
  bool intended_plans_pursuable = false;
  bool intended_posts_jointly_consistent = false;
  bool intended_plans_relevant = false;

  bool coherent() const;
  std::array<std::pair<const char*, bool>, 7> conditions() const;
  std::string summary() const;  // failed-condition names, comma separated
};

CoherenceReport is_coherent(const AgentProgram& ag);

}  // namespace dpl
