#pragma once

#include "dpl/program.hpp"

namespace dpl {

struct DynamicsOptions {
  /// Accept incoherent input programs instead of rejecting them.
  bool permissive = false;
  /// Intention filtering mode. The default keeps, for each operation, the
  /// exact filter of its base transformation (pre believed, post not yet
  /// believed, plus desire relevance where the operation touches desires).
  /// The strict mode applies the full admissibility filter uniformly: pre
  /// believed, post fully desired, post possible given knowledge, post not
  /// yet believed.
  bool strict_filter = false;
};

/// Knowledge acquisition: the fact joins the knowledge set and enters both
/// bases at rank 0. Rejected when it would empty the epistemic state.
AgentProgram announce(const AgentProgram& ag, const ConjClause& fact,
                      const DynamicsOptions& opts = {});

/// Belief revision: knowledge is pinned at rank 0, the new fact at rank 1,
/// and every old stratum is shifted down by two.
AgentProgram revise_belief(const AgentProgram& ag, const ConjClause& fact,
                           const DynamicsOptions& opts = {});

/// Goal adoption; mirror of revise_belief on the desire base.
AgentProgram revise_desire(const AgentProgram& ag, const ConjClause& fact,
                           const DynamicsOptions& opts = {});

/// Lexicographic contraction of a base by a disjunction of literals: every
/// literal over a symbol of `goal` is cleared from every stratum. Entries
/// reduced to top are kept so stratum indices never shift.
StratifiedBase cont_base(const StratifiedBase& base, const DnfFormula& goal);

AgentProgram contract_belief(const AgentProgram& ag, const DnfFormula& goal,
                             const DynamicsOptions& opts = {});

AgentProgram contract_desire(const AgentProgram& ag, const DnfFormula& goal,
                             const DynamicsOptions& opts = {});

}  // namespace dpl
