#pragma once

#include <string>
#include <vector>

#include "dpl/formula.hpp"
#include "dpl/plan_library.hpp"

namespace dpl {
namespace enc {

/// a -> b, stored as ~(a & ~b).
FormulaPtr implies(FormulaPtr a, FormulaPtr b);

/// Diamond duals ~[box]~f of the four preference boxes.
FormulaPtr diamond(Op box_op, FormulaPtr f);

/// min_P(f) / min_D(f): f holds and no strictly preferred world satisfies f.
FormulaPtr most_plausible(FormulaPtr f);
FormulaPtr most_desirable(FormulaPtr f);

/// K(f): universally true.
FormulaPtr knowledge(FormulaPtr f);

/// E(f): some world satisfies f.
FormulaPtr possible(FormulaPtr f);

/// B(f): true in every most plausible world.
FormulaPtr belief(FormulaPtr f);

/// G(f): true in every most desirable world.
FormulaPtr goal(FormulaPtr f);

/// AdmInt(f): desired, possible and not already believed.
FormulaPtr admissible_intention(FormulaPtr f);

/// Int(f): admissible and some adopted plan believed to achieve f. The
/// disjunction ranges over the whole plan library; an empty library gives
/// the always-false formula.
FormulaPtr intention(FormulaPtr f, const PlanLibrary& plans);

}  // namespace enc

/// Dispatch by surface name. Unary abbreviations take one argument;
/// "implies" takes two. Int needs the plan library.
FormulaPtr desugar(const std::string& abbreviation,
                   const std::vector<FormulaPtr>& args,
                   const PlanLibrary& plans);

}  // namespace dpl
