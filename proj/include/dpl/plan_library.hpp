#pragma once

#include <string>
#include <vector>

#include "dpl/formula.hpp"
#include "dpl/literal.hpp"

namespace dpl {

/// STRIPS-like plan: a propositional precondition and a consistent
/// conjunction of literals as postcondition. Plans are atomic; there are no
/// bodies or sequencing.
struct Plan {
  std::string name;
  FormulaPtr pre;
  ConjClause post;
};

struct PlanEntry {
  std::string name;
  FormulaPtr pre;
  FormulaPtr post;
};

/// Finite plan library, kept sorted by plan name.
class PlanLibrary {
 public:
  PlanLibrary() = default;

  static PlanLibrary make(const std::vector<PlanEntry>& entries);

  bool contains(const std::string& name) const;
  const Plan& plan(const std::string& name) const;  // UnknownPlan if missing
  const std::vector<Plan>& plans() const { return plans_; }
  bool empty() const { return plans_.empty(); }
  std::size_t size() const { return plans_.size(); }

  /// Every valuation satisfying the plan's postcondition satisfies `goal`.
  bool post_entails(const std::string& name, const DnfFormula& goal) const;

 private:
  std::vector<Plan> plans_;
};

}  // namespace dpl
