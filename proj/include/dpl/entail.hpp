#pragma once

#include "dpl/literal.hpp"

namespace dpl {

/// Exact classical entailment of a DNF goal from a partial literal
/// assignment: true iff every total valuation satisfying `facts` satisfies
/// `goal`. Decided three-valued first; only the goal's symbols that `facts`
/// leaves open are enumerated.
bool entails(const ConjClause& facts, const DnfFormula& goal);

}  // namespace dpl
