#include "dpl/plan_library.hpp"

#include <algorithm>

#include "dpl/entail.hpp"
#include "dpl/vocabulary.hpp"

namespace dpl {

namespace {

// Reserved because they open dynamic-modality brackets in formula syntax.
bool reserved_plan_name(const std::string& name) {
  return name == "upP" || name == "upD" || name == "downP" || name == "downD";
}

}  // namespace

PlanLibrary PlanLibrary::make(const std::vector<PlanEntry>& entries) {
  PlanLibrary lib;
  for (const PlanEntry& e : entries) {
    if (!is_identifier(e.name) || reserved_plan_name(e.name))
      throw Error("invalid plan name: '" + e.name + "'");
    if (lib.contains(e.name))
      throw DuplicatePlan("duplicate plan symbol: '" + e.name + "'");
    if (!is_propositional(e.pre))
      throw Error("plan precondition must be propositional: " + e.name);
    ConjClause post;
    try {
      post = to_conj_clause(e.post);
    } catch (const NotConjunctive&) {
      throw NonConjunctivePostcondition(
          "postcondition of plan '" + e.name +
          "' must be a conjunction of literals: " + print_formula(e.post));
    }
    if (!post.is_consistent())
      throw InconsistentPostcondition("postcondition of plan '" + e.name +
                                      "' is inconsistent: " +
                                      print_formula(e.post));
    lib.plans_.push_back({e.name, e.pre, std::move(post)});
  }
  std::sort(lib.plans_.begin(), lib.plans_.end(),
            [](const Plan& a, const Plan& b) { return a.name < b.name; });
  return lib;
}

bool PlanLibrary::contains(const std::string& name) const {
  return std::any_of(plans_.begin(), plans_.end(),
                     [&](const Plan& p) { return p.name == name; });
}

const Plan& PlanLibrary::plan(const std::string& name) const {
  for (const Plan& p : plans_)
    if (p.name == name) return p;
  throw UnknownPlan("unknown plan symbol: '" + name + "'");
}

bool PlanLibrary::post_entails(const std::string& name,
                               const DnfFormula& goal) const {
  return entails(plan(name).post, goal);
}

}  // namespace dpl
