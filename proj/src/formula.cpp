#include "dpl/formula.hpp"

#include <sstream>

namespace dpl {

namespace {

FormulaPtr node(Op op, std::string label, FormulaPtr a, FormulaPtr b) {
  struct Make : Formula {
    Make(Op op, std::string label, FormulaPtr a, FormulaPtr b)
        : Formula(op, std::move(label), std::move(a), std::move(b)) {}
  };
  return std::make_shared<const Make>(op, std::move(label), std::move(a),
                                      std::move(b));
}

}  // namespace

FormulaPtr Formula::atom(std::string name) {
  return node(Op::Atom, std::move(name), nullptr, nullptr);
}

const FormulaPtr& Formula::top() {
  static const FormulaPtr t = node(Op::Top, "", nullptr, nullptr);
  return t;
}

const FormulaPtr& Formula::bot() {
  static const FormulaPtr b = node(Op::Bot, "", nullptr, nullptr);
  return b;
}

FormulaPtr Formula::lnot(FormulaPtr f) {
  return node(Op::Not, "", std::move(f), nullptr);
}

FormulaPtr Formula::land(FormulaPtr l, FormulaPtr r) {
  return node(Op::And, "", std::move(l), std::move(r));
}

FormulaPtr Formula::lor(FormulaPtr l, FormulaPtr r) {
  return node(Op::Or, "", std::move(l), std::move(r));
}

FormulaPtr Formula::univ(FormulaPtr f) {
  return node(Op::Univ, "", std::move(f), nullptr);
}

FormulaPtr Formula::box(Op which, FormulaPtr f) {
  switch (which) {
    case Op::BoxLeqP:
    case Op::BoxLtP:
    case Op::BoxLeqD:
    case Op::BoxLtD:
      return node(which, "", std::move(f), nullptr);
    default:
      throw Error("Formula::box expects a preference box operator");
  }
}

FormulaPtr Formula::plan_box(std::string plan, FormulaPtr f) {
  return node(Op::PlanBox, std::move(plan), std::move(f), nullptr);
}

FormulaPtr Formula::intends_plan(std::string plan) {
  return node(Op::IntendsPlan, std::move(plan), nullptr, nullptr);
}

FormulaPtr Formula::dynamic(Op which, FormulaPtr arg, FormulaPtr body) {
  if (!is_dynamic(which))
    throw Error("Formula::dynamic expects a dynamic operator");
  if (!is_propositional(arg))
    throw Error("dynamic operation argument must be propositional: " +
                print_formula(arg));
  return node(which, "", std::move(arg), std::move(body));
}

bool is_dynamic(Op op) {
  switch (op) {
    case Op::DynAnnounce:
    case Op::DynUpgradeP:
    case Op::DynUpgradeD:
    case Op::DynContractP:
    case Op::DynContractD:
      return true;
    default:
      return false;
  }
}

bool is_box(Op op) {
  switch (op) {
    case Op::BoxLeqP:
    case Op::BoxLtP:
    case Op::BoxLeqD:
    case Op::BoxLtD:
      return true;
    default:
      return false;
  }
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->op() != b->op() || a->label() != b->label()) return false;
  return equal(a->left(), b->left()) && equal(a->right(), b->right());
}

bool is_propositional(const FormulaPtr& f) {
  if (!f) return true;
  switch (f->op()) {
    case Op::Atom:
    case Op::Top:
    case Op::Bot:
      return true;
    case Op::Not:
    case Op::And:
    case Op::Or:
      return is_propositional(f->left()) && is_propositional(f->right());
    default:
      return false;
  }
}

namespace {

// Precedence levels for printing: Or (1) < And (2) < prefix operators (3)
// < self-delimiting forms (4).
int precedence_of(const FormulaPtr& f) {
  switch (f->op()) {
    case Op::Or: return 1;
    case Op::And: return 2;
    case Op::Not:
    case Op::BoxLeqP:
    case Op::BoxLtP:
    case Op::BoxLeqD:
    case Op::BoxLtD:
    case Op::PlanBox:
    case Op::DynAnnounce:
    case Op::DynUpgradeP:
    case Op::DynUpgradeD:
    case Op::DynContractP:
    case Op::DynContractD:
      return 3;
    default:
      return 4;
  }
}

void print_rec(std::ostream& os, const FormulaPtr& f, int min_prec) {
  const int prec = precedence_of(f);
  const bool parens = prec < min_prec;
  if (parens) os << '(';
  switch (f->op()) {
    case Op::Atom: os << f->label(); break;
    case Op::Top: os << "top"; break;
    case Op::Bot: os << "bot"; break;
    case Op::Not:
      os << '~';
      print_rec(os, f->child(), 3);
      break;
    case Op::And:
      print_rec(os, f->left(), 2);
      os << " & ";
      print_rec(os, f->right(), 3);
      break;
    case Op::Or:
      print_rec(os, f->left(), 1);
      os << " | ";
      print_rec(os, f->right(), 2);
      break;
    case Op::Univ:
      os << "A(";
      print_rec(os, f->child(), 0);
      os << ')';
      break;
    case Op::BoxLeqP:
    case Op::BoxLtP:
    case Op::BoxLeqD:
    case Op::BoxLtD: {
      const char* tok = f->op() == Op::BoxLeqP   ? "[<=P]"
                        : f->op() == Op::BoxLtP  ? "[<P]"
                        : f->op() == Op::BoxLeqD ? "[<=D]"
                                                 : "[<D]";
      os << tok << ' ';
      print_rec(os, f->child(), 3);
      break;
    }
    case Op::PlanBox:
      os << '[' << f->label() << "] ";
      print_rec(os, f->child(), 3);
      break;
    case Op::IntendsPlan:
      os << "I(" << f->label() << ')';
      break;
    case Op::DynAnnounce:
    case Op::DynUpgradeP:
    case Op::DynUpgradeD:
    case Op::DynContractP:
    case Op::DynContractD: {
      const char* tok = f->op() == Op::DynAnnounce    ? "[! "
                        : f->op() == Op::DynUpgradeP  ? "[upP "
                        : f->op() == Op::DynUpgradeD  ? "[upD "
                        : f->op() == Op::DynContractP ? "[downP "
                                                      : "[downD ";
      os << tok;
      print_rec(os, f->dyn_arg(), 0);
      os << "] ";
      print_rec(os, f->dyn_body(), 3);
      break;
    }
  }
  if (parens) os << ')';
}

}  // namespace

std::string print_formula(const FormulaPtr& f) {
  std::ostringstream os;
  print_rec(os, f, 0);
  return os.str();
}

void collect_conj_literals(const FormulaPtr& f, std::vector<Literal>& out) {
  switch (f->op()) {
    case Op::Top:
      return;
    case Op::Atom:
      out.push_back({f->label(), true});
      return;
    case Op::Not:
      if (f->child()->op() == Op::Atom) {
        out.push_back({f->child()->label(), false});
        return;
      }
      break;
    case Op::And:
      collect_conj_literals(f->left(), out);
      collect_conj_literals(f->right(), out);
      return;
    default:
      break;
  }
  throw NotConjunctive("not a conjunction of literals: " + print_formula(f));
}

bool is_conjunctive_formula(const FormulaPtr& f) {
  std::vector<Literal> tmp;
  try {
    collect_conj_literals(f, tmp);
  } catch (const NotConjunctive&) {
    return false;
  }
  return true;
}

ConjClause to_conj_clause(const FormulaPtr& f) {
  std::vector<Literal> lits;
  collect_conj_literals(f, lits);
  return ConjClause(std::move(lits));
}

namespace {

void collect_disjuncts(const FormulaPtr& f, std::vector<FormulaPtr>& out) {
  if (f->op() == Op::Or) {
    collect_disjuncts(f->left(), out);
    collect_disjuncts(f->right(), out);
  } else {
    out.push_back(f);
  }
}

}  // namespace

DnfFormula to_dnf(const FormulaPtr& f) {
  std::vector<FormulaPtr> disjuncts;
  collect_disjuncts(f, disjuncts);
  std::vector<ConjClause> clauses;
  clauses.reserve(disjuncts.size());
  for (const FormulaPtr& d : disjuncts) {
    try {
      clauses.push_back(to_conj_clause(d));
    } catch (const NotConjunctive&) {
      throw NotDnf("not in disjunctive normal form: " + print_formula(f));
    }
  }
  return DnfFormula(std::move(clauses));
}

FormulaPtr clause_to_formula(const ConjClause& c) {
  if (c.empty()) return Formula::top();
  FormulaPtr out;
  for (const Literal& l : c) {
    FormulaPtr lit = l.positive ? Formula::atom(l.symbol)
                                : Formula::lnot(Formula::atom(l.symbol));
    out = out ? Formula::land(std::move(out), std::move(lit)) : std::move(lit);
  }
  return out;
}

FormulaPtr dnf_to_formula(const DnfFormula& d) {
  FormulaPtr out;
  for (const ConjClause& c : d.clauses()) {
    FormulaPtr cf = clause_to_formula(c);
    out = out ? Formula::lor(std::move(out), std::move(cf)) : std::move(cf);
  }
  return out;
}

}  // namespace dpl
