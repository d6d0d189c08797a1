#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "dpl/errors.hpp"

namespace dpl {

/// Signed propositional symbol.
struct Literal {
  std::string symbol;
  bool positive = true;

  Literal negated() const { return {symbol, !positive}; }

  friend auto operator<=>(const Literal&, const Literal&) = default;
};

inline std::string to_string(const Literal& l) {
  return l.positive ? l.symbol : "~" + l.symbol;
}

/// Conjunction of literals, kept as a sorted duplicate-free set. The empty
/// clause denotes "top". A clause may contain a complementary pair; callers
/// that need consistency check `is_consistent`.
class ConjClause {
 public:
  ConjClause() = default;

  explicit ConjClause(std::vector<Literal> literals)
      : literals_(std::move(literals)) {
    normalize();
  }

  void add(const Literal& l) {
    auto it = std::lower_bound(literals_.begin(), literals_.end(), l);
    if (it == literals_.end() || *it != l) literals_.insert(it, l);
  }

  bool contains(const Literal& l) const {
    return std::binary_search(literals_.begin(), literals_.end(), l);
  }

  bool contains_symbol(const std::string& symbol) const {
    return contains({symbol, true}) || contains({symbol, false});
  }

  /// No symbol occurs with both polarities.
  bool is_consistent() const {
    for (std::size_t i = 1; i < literals_.size(); ++i)
      if (literals_[i].symbol == literals_[i - 1].symbol &&
          literals_[i].positive != literals_[i - 1].positive)
        return false;
    return true;
  }

  bool consistent_with(const ConjClause& other) const {
    return std::none_of(other.begin(), other.end(), [&](const Literal& l) {
      return contains(l.negated());
    });
  }

  ConjClause united_with(const ConjClause& other) const {
    ConjClause out = *this;
    for (const Literal& l : other) out.add(l);
    return out;
  }

  std::vector<std::string> symbols() const {
    std::vector<std::string> out;
    for (const Literal& l : literals_)
      if (out.empty() || out.back() != l.symbol) out.push_back(l.symbol);
    return out;
  }

  bool empty() const { return literals_.empty(); }
  std::size_t size() const { return literals_.size(); }
  std::vector<Literal>::const_iterator begin() const {
    return literals_.begin();
  }
  std::vector<Literal>::const_iterator end() const { return literals_.end(); }
  const std::vector<Literal>& literals() const { return literals_; }

  friend auto operator<=>(const ConjClause&, const ConjClause&) = default;

 private:
  void normalize() {
    std::sort(literals_.begin(), literals_.end());
    literals_.erase(std::unique(literals_.begin(), literals_.end()),
                    literals_.end());
  }

  std::vector<Literal> literals_;
};

inline std::string to_string(const ConjClause& c) {
  if (c.empty()) return "top";
  std::string out;
  for (const Literal& l : c) {
    if (!out.empty()) out += " & ";
    out += to_string(l);
  }
  return out;
}

/// Disjunction of conjunctive clauses. Nonempty by construction; a clause
/// with no literals makes the whole formula "top".
class DnfFormula {
 public:
  explicit DnfFormula(std::vector<ConjClause> clauses)
      : clauses_(std::move(clauses)) {
    if (clauses_.empty())
      throw Error("a DNF formula needs at least one clause");
  }

  static DnfFormula top() { return DnfFormula({ConjClause{}}); }

  const std::vector<ConjClause>& clauses() const { return clauses_; }

  std::vector<std::string> symbols() const {
    std::vector<std::string> out;
    for (const ConjClause& c : clauses_)
      for (const Literal& l : c) out.push_back(l.symbol);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  friend bool operator==(const DnfFormula&, const DnfFormula&) = default;

 private:
  std::vector<ConjClause> clauses_;
};

inline std::string to_string(const DnfFormula& d) {
  std::string out;
  for (const ConjClause& c : d.clauses()) {
    if (!out.empty()) out += " | ";
    bool parens = d.clauses().size() > 1 && c.size() > 1;
    out += parens ? "(" + to_string(c) + ")" : to_string(c);
  }
  return out;
}

}  // namespace dpl
