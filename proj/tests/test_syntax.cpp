#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dpl/formula.hpp"
#include "dpl/parser.hpp"
#include "dpl/sugar.hpp"

#include "support.hpp"

using namespace dpl;

namespace {

Vocabulary vocab_pq() { return Vocabulary({"p", "q"}); }
Vocabulary vocab_pqr() { return Vocabulary({"p", "q", "r"}); }

PlanLibrary lib_one_plan() {
  return PlanLibrary::make(
      {{"a", Formula::atom("p"), Formula::atom("r")}});
}

FormulaPtr parse(const std::string& text) {
  return parse_formula(text, vocab_pqr(), lib_one_plan());
}

}  // namespace

TEST_CASE("parsing the core connectives") {
  FormulaPtr f = parse("p & ~q");
  REQUIRE(f->op() == Op::And);
  CHECK(f->left()->op() == Op::Atom);
  CHECK(f->left()->label() == "p");
  REQUIRE(f->right()->op() == Op::Not);
  CHECK(f->right()->child()->label() == "q");
}

TEST_CASE("operator precedence and associativity") {
  // unary > & > | > ->, with & and | left-associative
  CHECK(equal(parse("p | q & r"),
              Formula::lor(Formula::atom("p"),
                           Formula::land(Formula::atom("q"),
                                         Formula::atom("r")))));
  CHECK(equal(parse("p & q & r"),
              Formula::land(Formula::land(Formula::atom("p"),
                                          Formula::atom("q")),
                            Formula::atom("r"))));
  // -> is right-associative and desugars to ~(a & ~b)
  CHECK(equal(parse("p -> q -> r"),
              enc::implies(Formula::atom("p"),
                           enc::implies(Formula::atom("q"),
                                        Formula::atom("r")))));
  CHECK(equal(parse("~[<=P] p"),
              Formula::lnot(Formula::box(Op::BoxLeqP, Formula::atom("p")))));
}

TEST_CASE("belief abbreviation is stored desugared") {
  // B(p) becomes A(min_P(top) -> p) in core constructors only
  FormulaPtr parsed = parse("B(p)");
  FormulaPtr expected = Formula::univ(enc::implies(
      enc::most_plausible(Formula::top()), Formula::atom("p")));
  CHECK(equal(parsed, expected));
  REQUIRE(parsed->op() == Op::Univ);
  REQUIRE(parsed->child()->op() == Op::Not);  // implication shell
}

TEST_CASE("dynamic announcement wraps a desugared body") {
  FormulaPtr parsed = parse("[! p] B(q)");
  REQUIRE(parsed->op() == Op::DynAnnounce);
  CHECK(equal(parsed->dyn_arg(), Formula::atom("p")));
  CHECK(equal(parsed->dyn_body(), parse("B(q)")));
}

TEST_CASE("dynamic arguments must be propositional") {
  CHECK_THROWS_AS(parse("[! B(p)] q"), ParseError);
  CHECK_THROWS_AS(
      Formula::dynamic(Op::DynAnnounce, Formula::univ(Formula::atom("p")),
                       Formula::atom("q")),
      Error);
}

TEST_CASE("parse errors carry a location") {
  try {
    parse("p & (q");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() >= 6);
  }
  CHECK_THROWS_AS(parse("nosuch"), ParseError);     // unknown symbol
  CHECK_THROWS_AS(parse("[nosuch] p"), ParseError); // unknown plan
  CHECK_THROWS_AS(parse("I(nosuch)"), ParseError);
}

TEST_CASE("printing uses minimal parentheses") {
  CHECK(print_formula(Formula::atom("p")) == "p");
  CHECK(print_formula(Formula::land(Formula::atom("p"),
                                    Formula::lnot(Formula::atom("q")))) ==
        "p & ~q");
  CHECK(print_formula(Formula::box(Op::BoxLeqP, Formula::atom("p"))) ==
        "[<=P] p");
  CHECK(print_formula(Formula::land(
            Formula::lor(Formula::atom("p"), Formula::atom("q")),
            Formula::atom("r"))) == "(p | q) & r");
  CHECK(print_formula(Formula::box(
            Op::BoxLtD, Formula::land(Formula::atom("p"),
                                      Formula::atom("q")))) == "[<D] (p & q)");
}

TEST_CASE("desugar dispatch matches the encodings") {
  PlanLibrary plans = lib_one_plan();
  FormulaPtr p = Formula::atom("p");

  CHECK(equal(desugar("K", {p}, plans), Formula::univ(p)));

  // min_P(top) = top & ~<P-diamond> top, with the diamond spelled out
  FormulaPtr diamond = Formula::lnot(
      Formula::box(Op::BoxLtP, Formula::lnot(Formula::top())));
  CHECK(equal(desugar("min_P", {Formula::top()}, plans),
              Formula::land(Formula::top(), Formula::lnot(diamond))));

  // Int(r) with a single plan: AdmInt(r) & (I(a) & B(p & [a] r))
  FormulaPtr r = Formula::atom("r");
  FormulaPtr expected = Formula::land(
      enc::admissible_intention(r),
      Formula::land(Formula::intends_plan("a"),
                    enc::belief(Formula::land(Formula::atom("p"),
                                              Formula::plan_box("a", r)))));
  CHECK(equal(desugar("Int", {r}, plans), expected));

  CHECK_THROWS_AS(desugar("NoSuch", {p}, plans), UnknownAbbreviation);
}

TEST_CASE("intention over an empty library is everywhere false") {
  FormulaPtr f = enc::intention(Formula::atom("p"), PlanLibrary{});
  REQUIRE(f->op() == Op::And);
  CHECK(f->right()->op() == Op::Bot);
}

TEST_CASE("conjunction-of-literals recognition") {
  Vocabulary v = vocab_pqr();
  PlanLibrary none;
  ConjClause c = to_conj_clause(parse_formula("p & (~q & p)", v, none));
  CHECK(c == ConjClause({{"p", true}, {"q", false}}));
  CHECK(to_conj_clause(Formula::top()).empty());
  CHECK_THROWS_AS(to_conj_clause(parse_formula("p | q", v, none)),
                  NotConjunctive);
  CHECK_THROWS_AS(to_conj_clause(Formula::bot()), NotConjunctive);
  // clauses may carry a complementary pair; consistency is the caller's call
  ConjClause contradiction = to_conj_clause(parse_formula("p & ~p", v, none));
  CHECK_FALSE(contradiction.is_consistent());
}

TEST_CASE("syntactic DNF recognition keeps textual order") {
  Vocabulary v = vocab_pqr();
  PlanLibrary none;
  DnfFormula d = to_dnf(parse_formula("(p & q) | ~r", v, none));
  REQUIRE(d.clauses().size() == 2);
  CHECK(d.clauses()[0] == ConjClause({{"p", true}, {"q", true}}));
  CHECK(d.clauses()[1] == ConjClause({{"r", false}}));

  DnfFormula single = to_dnf(parse_formula("p", v, none));
  CHECK(single.clauses() == std::vector<ConjClause>{ConjClause({{"p", true}})});

  // negation above a conjunction is refused, not normalized
  CHECK_THROWS_AS(to_dnf(parse_formula("~(p & q)", v, none)), NotDnf);
}

TEST_CASE("clause and DNF conversions preserve the truth function") {
  Vocabulary v(std::vector<std::string>{"p", "q", "r", "s", "t", "u"});
  PlanLibrary none;
  dpl::Rng rng(2024);
  for (int i = 0; i < 300; ++i) {
    DnfFormula d = random_dnf(rng, v, 3, 3);
    FormulaPtr f = dnf_to_formula(d);
    CHECK(testing::tt_equivalent(f, to_dnf(f), v.symbols()));
    ConjClause c = random_clause(rng, v, 4, false, true);
    CHECK(to_conj_clause(clause_to_formula(c)) == c);
  }
}

TEST_CASE("parse of print is the identity on formula trees") {
  Vocabulary v = vocab_pqr();
  PlanLibrary plans = lib_one_plan();
  dpl::Rng rng(7);
  for (int i = 0; i < 400; ++i) {
    FormulaPtr f = testing::random_ast(rng, v, plans, 4);
    FormulaPtr back = parse_formula(print_formula(f), v, plans);
    CHECK(equal(f, back));
  }
}
