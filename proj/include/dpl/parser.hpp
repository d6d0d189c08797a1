#pragma once

#include <string>

#include "dpl/formula.hpp"
#include "dpl/plan_library.hpp"
#include "dpl/vocabulary.hpp"

namespace dpl {

/// Parses the concrete formula syntax. Abbreviations (K, B, G, E, AdmInt,
/// Int, min_P, min_D, diamonds, ->) are accepted and stored desugared.
/// Atoms must belong to `vocab`; plan symbols to `plans`.
FormulaPtr parse_formula(const std::string& text, const Vocabulary& vocab,
                         const PlanLibrary& plans);

}  // namespace dpl
