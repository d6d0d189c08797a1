#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "dpl/errors.hpp"
#include "dpl/plan_library.hpp"
#include "dpl/vocabulary.hpp"

namespace dpl {

/// Possible world: a stable identifier plus a total valuation in vocabulary
/// order. Identity is separate from the valuation so plan execution can
/// overwrite valuations without merging worlds.
struct World {
  int id = 0;
  std::vector<bool> valuation;
};

/// Reflexive transitive relation over world positions.
class Preorder {
 public:
  Preorder() = default;
  explicit Preorder(std::size_t n, bool totally_connected = false)
      : n_(n), leq_(n * n, totally_connected) {
    for (std::size_t i = 0; i < n_; ++i) set(i, i, true);
  }

  static Preorder total(std::size_t n) { return Preorder(n, true); }

  std::size_t size() const { return n_; }
  bool leq(std::size_t i, std::size_t j) const { return leq_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, bool v) { leq_[i * n_ + j] = v; }
  bool lt(std::size_t i, std::size_t j) const { return leq(i, j) && !leq(j, i); }

  bool is_reflexive() const;
  bool is_transitive() const;
  bool is_preorder() const { return is_reflexive() && is_transitive(); }
  bool is_total() const;

  Preorder restricted_to(const std::vector<std::size_t>& keep) const;
  void close_reflexive_transitive();

  friend bool operator==(const Preorder&, const Preorder&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<bool> leq_;
};

/// Semantic mental state: finite worlds, plausibility and desirability
/// preorders, adopted plans, and the governing plan library.
struct AgentModel {
  Vocabulary vocab;
  PlanLibrary library;
  std::vector<World> worlds;
  Preorder plausibility;
  Preorder desirability;
  std::set<std::string> intentions;

  std::optional<std::size_t> index_of(int world_id) const {
    for (std::size_t i = 0; i < worlds.size(); ++i)
      if (worlds[i].id == world_id) return i;
    return std::nullopt;
  }
};

/// Equality up to world identity: valuation multisets, both preorders
/// projected to valuation pairs, and intention sets.
bool models_equal(const AgentModel& a, const AgentModel& b);

void dump_model(const AgentModel& m, std::ostream& os);

/// Graphviz export: one node per world labeled with its true atoms, solid
/// edges for strict plausibility, dashed for strict desirability, both
/// transitively reduced.
void export_dot(const AgentModel& m, std::ostream& os);

}  // namespace dpl
