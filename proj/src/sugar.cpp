#include "dpl/sugar.hpp"

namespace dpl {
namespace enc {

FormulaPtr implies(FormulaPtr a, FormulaPtr b) {
  return Formula::lnot(
      Formula::land(std::move(a), Formula::lnot(std::move(b))));
}

FormulaPtr diamond(Op box_op, FormulaPtr f) {
  return Formula::lnot(Formula::box(box_op, Formula::lnot(std::move(f))));
}

FormulaPtr most_plausible(FormulaPtr f) {
  return Formula::land(f, Formula::lnot(diamond(Op::BoxLtP, f)));
}

FormulaPtr most_desirable(FormulaPtr f) {
  return Formula::land(f, Formula::lnot(diamond(Op::BoxLtD, f)));
}

FormulaPtr knowledge(FormulaPtr f) { return Formula::univ(std::move(f)); }

FormulaPtr possible(FormulaPtr f) {
  return Formula::lnot(Formula::univ(Formula::lnot(std::move(f))));
}

FormulaPtr belief(FormulaPtr f) {
  return Formula::univ(implies(most_plausible(Formula::top()), std::move(f)));
}

FormulaPtr goal(FormulaPtr f) {
  return Formula::univ(implies(most_desirable(Formula::top()), std::move(f)));
}

FormulaPtr admissible_intention(FormulaPtr f) {
  return Formula::land(Formula::land(goal(f), possible(f)),
                       Formula::lnot(belief(f)));
}

FormulaPtr intention(FormulaPtr f, const PlanLibrary& plans) {
  FormulaPtr achievable;
  for (const Plan& p : plans.plans()) {
    FormulaPtr disjunct = Formula::land(
        Formula::intends_plan(p.name),
        belief(Formula::land(p.pre, Formula::plan_box(p.name, f))));
    achievable = achievable
                     ? Formula::lor(std::move(achievable), std::move(disjunct))
                     : std::move(disjunct);
  }
  if (!achievable) achievable = Formula::bot();
  return Formula::land(admissible_intention(f), std::move(achievable));
}

}  // namespace enc

FormulaPtr desugar(const std::string& abbreviation,
                   const std::vector<FormulaPtr>& args,
                   const PlanLibrary& plans) {
  auto unary = [&]() -> const FormulaPtr& {
    if (args.size() != 1)
      throw Error("abbreviation '" + abbreviation + "' takes one argument");
    return args[0];
  };
  if (abbreviation == "K") return enc::knowledge(unary());
  if (abbreviation == "A") return Formula::univ(unary());
  if (abbreviation == "E") return enc::possible(unary());
  if (abbreviation == "B") return enc::belief(unary());
  if (abbreviation == "G") return enc::goal(unary());
  if (abbreviation == "AdmInt") return enc::admissible_intention(unary());
  if (abbreviation == "Int") return enc::intention(unary(), plans);
  if (abbreviation == "min_P") return enc::most_plausible(unary());
  if (abbreviation == "min_D") return enc::most_desirable(unary());
  if (abbreviation == "<<=P>") return enc::diamond(Op::BoxLeqP, unary());
  if (abbreviation == "<<P>") return enc::diamond(Op::BoxLtP, unary());
  if (abbreviation == "<<=D>") return enc::diamond(Op::BoxLeqD, unary());
  if (abbreviation == "<<D>") return enc::diamond(Op::BoxLtD, unary());
  if (abbreviation == "implies") {
    if (args.size() != 2) throw Error("'implies' takes two arguments");
    return enc::implies(args[0], args[1]);
  }
  throw UnknownAbbreviation("unknown abbreviation: '" + abbreviation + "'");
}

}  // namespace dpl
