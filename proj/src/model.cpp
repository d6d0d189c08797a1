#include "dpl/model.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace dpl {

bool Preorder::is_reflexive() const {
  for (std::size_t i = 0; i < n_; ++i)
    if (!leq(i, i)) return false;
  return true;
}

bool Preorder::is_transitive() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      if (!leq(i, j)) continue;
      for (std::size_t k = 0; k < n_; ++k)
        if (leq(j, k) && !leq(i, k)) return false;
    }
  return true;
}

bool Preorder::is_total() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (!leq(i, j) && !leq(j, i)) return false;
  return true;
}

Preorder Preorder::restricted_to(const std::vector<std::size_t>& keep) const {
  Preorder out(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j)
      out.set(i, j, leq(keep[i], keep[j]));
  return out;
}

void Preorder::close_reflexive_transitive() {
  for (std::size_t i = 0; i < n_; ++i) set(i, i, true);
  for (std::size_t k = 0; k < n_; ++k)
    for (std::size_t i = 0; i < n_; ++i) {
      if (!leq(i, k)) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (leq(k, j)) set(i, j, true);
    }
}

namespace {

using ValuationPair = std::pair<std::vector<bool>, std::vector<bool>>;

std::multiset<std::vector<bool>> valuation_multiset(const AgentModel& m) {
  std::multiset<std::vector<bool>> out;
  for (const World& w : m.worlds) out.insert(w.valuation);
  return out;
}

std::set<ValuationPair> relation_pairs(const AgentModel& m,
                                       const Preorder& order) {
  std::set<ValuationPair> out;
  for (std::size_t i = 0; i < m.worlds.size(); ++i)
    for (std::size_t j = 0; j < m.worlds.size(); ++j)
      if (order.leq(i, j))
        out.insert({m.worlds[i].valuation, m.worlds[j].valuation});
  return out;
}

}  // namespace

bool models_equal(const AgentModel& a, const AgentModel& b) {
  if (!(a.vocab == b.vocab))
    throw VocabularyMismatch("models compared over different vocabularies");
  if (valuation_multiset(a) != valuation_multiset(b)) return false;
  if (relation_pairs(a, a.plausibility) != relation_pairs(b, b.plausibility))
    return false;
  if (relation_pairs(a, a.desirability) != relation_pairs(b, b.desirability))
    return false;
  return a.intentions == b.intentions;
}

namespace {

std::string world_label(const AgentModel& m, const World& w) {
  std::string out;
  for (std::size_t i = 0; i < m.vocab.size(); ++i) {
    if (!out.empty()) out += ' ';
    out += w.valuation[i] ? m.vocab.symbol(i) : "~" + m.vocab.symbol(i);
  }
  return out.empty() ? "-" : out;
}

std::string true_atoms(const AgentModel& m, const World& w) {
  std::string out;
  for (std::size_t i = 0; i < m.vocab.size(); ++i) {
    if (!w.valuation[i]) continue;
    if (!out.empty()) out += ' ';
    out += m.vocab.symbol(i);
  }
  return out.empty() ? "-" : out;
}

// Strict pairs with every edge implied by a longer strict path removed.
std::vector<std::pair<std::size_t, std::size_t>> reduced_strict(
    const Preorder& order) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = order.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!order.lt(i, j)) continue;
      bool implied = false;
      for (std::size_t k = 0; k < n && !implied; ++k)
        implied = k != i && k != j && order.lt(i, k) && order.lt(k, j);
      if (!implied) out.emplace_back(i, j);
    }
  return out;
}

}  // namespace

void dump_model(const AgentModel& m, std::ostream& os) {
  os << "vocab:";
  for (const std::string& s : m.vocab.symbols()) os << ' ' << s;
  os << '\n';
  os << "worlds: " << m.worlds.size() << '\n';
  for (const World& w : m.worlds)
    os << "  w" << w.id << ": " << world_label(m, w) << '\n';
  auto dump_order = [&](const char* name, const Preorder& order) {
    os << name << ":\n";
    for (std::size_t i = 0; i < m.worlds.size(); ++i) {
      os << "  w" << m.worlds[i].id << " <= {";
      bool first = true;
      for (std::size_t j = 0; j < m.worlds.size(); ++j) {
        if (!order.leq(i, j)) continue;
        os << (first ? "" : " ") << 'w' << m.worlds[j].id;
        first = false;
      }
      os << "}\n";
    }
  };
  dump_order("plausibility", m.plausibility);
  dump_order("desirability", m.desirability);
  os << "intentions:";
  for (const std::string& name : m.intentions) os << ' ' << name;
  os << '\n';
}

void export_dot(const AgentModel& m, std::ostream& os) {
  os << "digraph mental_state {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box];\n";
  for (const World& w : m.worlds)
    os << "  w" << w.id << " [label=\"" << true_atoms(m, w) << "\"];\n";
  for (const auto& [i, j] : reduced_strict(m.plausibility))
    os << "  w" << m.worlds[i].id << " -> w" << m.worlds[j].id << ";\n";
  for (const auto& [i, j] : reduced_strict(m.desirability))
    os << "  w" << m.worlds[i].id << " -> w" << m.worlds[j].id
       << " [style=dashed];\n";
  os << "}\n";
}

}  // namespace dpl
