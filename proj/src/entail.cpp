#include "dpl/entail.hpp"

#include <algorithm>
#include <cstdint>

namespace dpl {

namespace {

enum Tri { False = -1, Unknown = 0, True = 1 };

Tri clause_value(const ConjClause& clause, const ConjClause& facts) {
  Tri v = True;
  for (const Literal& l : clause) {
    if (facts.contains(l)) continue;
    if (facts.contains(l.negated())) return False;
    v = Unknown;
  }
  return v;
}

}  // namespace

bool entails(const ConjClause& facts, const DnfFormula& goal) {
  bool all_false = true;
  for (const ConjClause& clause : goal.clauses()) {
    switch (clause_value(clause, facts)) {
      case True: return true;
      case False: break;
      case Unknown: all_false = false; break;
    }
  }
  if (all_false) return false;

  // Undetermined: enumerate the goal symbols that facts leaves open.
  std::vector<std::string> free_syms;
  for (const std::string& s : goal.symbols())
    if (!facts.contains_symbol(s)) free_syms.push_back(s);

  const std::size_t n = free_syms.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    auto holds = [&](const Literal& l) {
      if (facts.contains(l)) return true;
      if (facts.contains(l.negated())) return false;
      auto it = std::lower_bound(free_syms.begin(), free_syms.end(), l.symbol);
      std::size_t idx = static_cast<std::size_t>(it - free_syms.begin());
      bool value = (mask >> idx) & 1;
      return value == l.positive;
    };
    bool sat = false;
    for (const ConjClause& clause : goal.clauses()) {
      if (std::all_of(clause.begin(), clause.end(), holds)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

}  // namespace dpl
