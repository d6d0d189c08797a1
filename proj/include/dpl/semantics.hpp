#pragma once

#include <vector>

#include "dpl/model.hpp"
#include "dpl/program.hpp"

namespace dpl {

enum class OrderKind { Plausibility, Desirability };

/// Truth at a world by structural recursion over the satisfaction clauses.
/// Plan boxes are conditional on the precondition; dynamic modalities
/// evaluate their body in the transformed model and are vacuously true at
/// worlds the transformation deleted.
bool evaluate(const AgentModel& m, int world_id, const FormulaPtr& f);

/// Truth at every world (vacuously true on the empty model).
bool model_satisfies(const AgentModel& m, const FormulaPtr& f);

/// Ids of the worlds satisfying the formula, ascending.
std::vector<int> extension(const AgentModel& m, const FormulaPtr& f);

/// Members of `ids` with no strictly preferred member inside `ids`.
std::vector<int> min_worlds(const AgentModel& m, OrderKind kind,
                            const std::vector<int>& ids);

/// Plan execution: worlds failing the precondition are removed, surviving
/// valuations are overwritten on the postcondition symbols, identifiers and
/// intentions are preserved.
AgentModel execute_plan(const AgentModel& m, const std::string& plan);

/// Public announcement: restriction to the fact's extension; intentions are
/// re-filtered to the maximal admissible subset.
AgentModel announce_model(const AgentModel& m, const FormulaPtr& fact);

/// Radical upgrade of one order: every world satisfying the fact becomes
/// strictly preferred to every world that does not; ties keep the old order.
AgentModel upgrade_model(const AgentModel& m, OrderKind kind,
                         const FormulaPtr& fact);

/// Length of the longest strict chain inside the formula's extension from a
/// minimal world to `world_id`.
int plausibility_degree(const AgentModel& m, OrderKind kind,
                        const FormulaPtr& f, int world_id);

/// Lexicographic contraction of one order: pairs on the same side of the
/// fact keep the old order, cross pairs compare degrees strictly; the
/// reflexive-transitive closure is taken afterwards.
AgentModel contract_model(const AgentModel& m, OrderKind kind,
                          const FormulaPtr& fact);

/// Adopted plans whose precondition is believed and whose postcondition is
/// an admissible intention. Conditions are per-plan, so this is the unique
/// maximal admissible subset.
std::set<std::string> max_coherent_intentions(const AgentModel& m);

bool is_coherent_model(const AgentModel& m);

/// Preorder induced by a stratified base: a world is at least as preferred
/// as another when, for every rank, it satisfies the stratum whenever the
/// other does or some strictly earlier stratum separates them.
Preorder induced_order(const StratifiedBase& base, const Vocabulary& vocab,
                       const std::vector<World>& worlds);

/// Model induced by a program: all valuations satisfying the knowledge set,
/// ordered by the induced orders of the two bases.
AgentModel induced_model(const AgentProgram& ag, int world_cap_symbols = 16);

/// Program whose induced model reproduces a ranked model: the knowledge set
/// pins the world set and each base stratum accumulates the world
/// descriptions of one more rank. Requires total preorders and duplicate-free
/// valuations; the round-trip is verified before returning.
AgentProgram extract_program(const AgentModel& m);

}  // namespace dpl
