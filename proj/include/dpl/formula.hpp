#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "dpl/errors.hpp"
#include "dpl/literal.hpp"

namespace dpl {

enum class Op : std::uint8_t {
  Atom,
  Top,
  Bot,
  Not,
  And,
  Or,
  Univ,         // A phi
  BoxLeqP,      // all at-least-as-plausible worlds
  BoxLtP,       // all strictly-more-plausible worlds
  BoxLeqD,
  BoxLtD,
  PlanBox,      // after executing a plan
  IntendsPlan,  // procedural intention marker
  DynAnnounce,
  DynUpgradeP,
  DynUpgradeD,
  DynContractP,
  DynContractD,
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable formula node. Named abbreviations (K, B, G, ...) are expanded
/// at construction time, so evaluators only ever see these constructors.
class Formula {
 public:
  Op op() const { return op_; }

  /// Atom symbol, or plan name for PlanBox/IntendsPlan.
  const std::string& label() const { return label_; }

  const FormulaPtr& child() const { return a_; }  // unary operand
  const FormulaPtr& left() const { return a_; }
  const FormulaPtr& right() const { return b_; }
  const FormulaPtr& dyn_arg() const { return a_; }   // the announced/upgraded fact
  const FormulaPtr& dyn_body() const { return b_; }  // evaluated in the new model

  static FormulaPtr atom(std::string name);
  static const FormulaPtr& top();
  static const FormulaPtr& bot();
  static FormulaPtr lnot(FormulaPtr f);
  static FormulaPtr land(FormulaPtr l, FormulaPtr r);
  static FormulaPtr lor(FormulaPtr l, FormulaPtr r);
  static FormulaPtr univ(FormulaPtr f);
  static FormulaPtr box(Op which, FormulaPtr f);
  static FormulaPtr plan_box(std::string plan, FormulaPtr f);
  static FormulaPtr intends_plan(std::string plan);

  /// Dynamic modality; `arg` must be propositional.
  static FormulaPtr dynamic(Op which, FormulaPtr arg, FormulaPtr body);

 protected:
  Formula(Op op, std::string label, FormulaPtr a, FormulaPtr b)
      : op_(op), label_(std::move(label)), a_(std::move(a)), b_(std::move(b)) {}

 private:
  Op op_;
  std::string label_;
  FormulaPtr a_;
  FormulaPtr b_;
};

bool is_dynamic(Op op);
bool is_box(Op op);

/// Structural equality.
bool equal(const FormulaPtr& a, const FormulaPtr& b);

/// True when the formula contains no modal or dynamic operator.
bool is_propositional(const FormulaPtr& f);

/// Emits text that parse_formula maps back to a structurally identical tree.
std::string print_formula(const FormulaPtr& f);

/// Appends the literals of a conjunction of literals (associativity and top
/// units allowed). Throws NotConjunctive on anything else.
void collect_conj_literals(const FormulaPtr& f, std::vector<Literal>& out);

bool is_conjunctive_formula(const FormulaPtr& f);

ConjClause to_conj_clause(const FormulaPtr& f);

/// Recognizes a formula that is syntactically a disjunction of conjunctions
/// of literals; clauses come back in textual order. No normalization.
DnfFormula to_dnf(const FormulaPtr& f);

FormulaPtr clause_to_formula(const ConjClause& c);
FormulaPtr dnf_to_formula(const DnfFormula& d);

/// Evaluates a propositional formula against a symbol valuation.
template <class Pred>
bool eval_prop(const FormulaPtr& f, const Pred& val) {
  switch (f->op()) {
    case Op::Atom: return val(f->label());
    case Op::Top: return true;
    case Op::Bot: return false;
    case Op::Not: return !eval_prop(f->child(), val);
    case Op::And: return eval_prop(f->left(), val) && eval_prop(f->right(), val);
    case Op::Or: return eval_prop(f->left(), val) || eval_prop(f->right(), val);
    default:
      throw Error("formula is not propositional: " + print_formula(f));
  }
}

}  // namespace dpl
