#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dpl/program.hpp"

#include "dpl/agent_file.hpp"
#include "support.hpp"

using namespace dpl;

namespace {

FormulaPtr atom(const char* s) { return Formula::atom(s); }
FormulaPtr neg(FormulaPtr f) { return Formula::lnot(std::move(f)); }

ConjClause lits(std::vector<Literal> ls) { return ConjClause(std::move(ls)); }

DnfFormula dnf1(ConjClause c) { return DnfFormula({std::move(c)}); }

AgentProgram basic_program() {
  AgentProgram ag;
  ag.vocab = Vocabulary({"p", "q", "r", "s"});
  ag.library = PlanLibrary::make({});
  return ag;
}

}  // namespace

TEST_CASE("stratified base bookkeeping") {
  StratifiedBase base;
  base.add(atom("p"), 1);
  base.add(atom("p"), 1);  // set semantics
  base.add(atom("q"), 0);
  base.add(atom("p"), 2);
  CHECK(base.size() == 3);
  CHECK(base.ranks() == std::vector<int>{0, 1, 2});
  CHECK(base.stratum(1).size() == 1);
  CHECK(base.contains(atom("p"), 2));
  CHECK_FALSE(base.contains(atom("q"), 2));
  CHECK_THROWS_AS(base.add(atom("p"), -1), Error);
}

TEST_CASE("maximal consistent selection drops whole strata") {
  // stratum 2 conflicts with accumulated p, so its q is lost as well
  StratifiedBase base({{atom("p"), 1},
                       {Formula::land(neg(atom("p")), atom("q")), 2},
                       {atom("r"), 3}});
  CHECK(max_consistent(base) == lits({{"p", true}, {"r", true}}));

  CHECK(max_consistent(StratifiedBase{}).empty());

  // internally inconsistent strata are skipped without poisoning later ones
  StratifiedBase base2({{Formula::land(atom("p"), neg(atom("p"))), 1},
                        {atom("q"), 2}});
  CHECK(max_consistent(base2) == lits({{"q", true}}));
}

TEST_CASE("maximal consistent selection starts at the minimum rank") {
  StratifiedBase base({{atom("p"), 0}, {neg(atom("p")), 1}});
  CHECK(max_consistent(base) == lits({{"p", true}}));
  CHECK_THROWS_AS(max_consistent(StratifiedBase({{Formula::lor(atom("p"),
                                                               atom("q")),
                                                  1}})),
                  NotConjunctive);
}

TEST_CASE("selection agrees with the brute-force prioritized oracle") {
  Vocabulary v(std::vector<std::string>{"p", "q", "r"});
  dpl::Rng rng(31);
  GeneratorOptions g;
  for (int i = 0; i < 500; ++i) {
    StratifiedBase base;
    const int strata = 1 + static_cast<int>(rng.below(3));
    for (int rank = 1; rank <= strata; ++rank) {
      const int m = static_cast<int>(rng.below(3));
      for (int k = 0; k < m; ++k)
        base.add(clause_to_formula(
                     random_clause(rng, v, 2, !rng.chance(1, 6), false)),
                 rank);
    }
    CHECK(max_consistent(base) == testing::bf_prioritized_max(base, v.symbols()));
  }
  (void)g;
}

TEST_CASE("minimum-rank literals of a consistent base always survive") {
  Vocabulary v(std::vector<std::string>{"p", "q", "r"});
  dpl::Rng rng(32);
  for (int i = 0; i < 300; ++i) {
    StratifiedBase base;
    ConjClause first = random_clause(rng, v, 3, true, false);
    base.add(clause_to_formula(first), 1);
    for (int rank = 2; rank <= 3; ++rank)
      base.add(clause_to_formula(random_clause(rng, v, 2, true, false)), rank);
    ConjClause result = max_consistent(base);
    for (const Literal& l : first) CHECK(result.contains(l));
  }
}

TEST_CASE("entailment from literal sets") {
  CHECK(base_entails(lits({{"p", true}, {"r", true}}),
                     dnf1(lits({{"p", true}}))));
  // tautology over q from the empty set
  CHECK(base_entails(ConjClause{},
                     DnfFormula({lits({{"q", true}}), lits({{"q", false}})})));
  CHECK_FALSE(base_entails(ConjClause{}, dnf1(lits({{"p", true}}))));
  CHECK_THROWS_AS(base_entails(lits({{"p", true}, {"p", false}}),
                               DnfFormula::top()),
                  InconsistentLiteralSet);
}

TEST_CASE("mental attitude queries") {
  AgentProgram ag = basic_program();
  ag.knowledge.push_back(atom("p"));
  ag.beliefs.add(atom("p"), 0);
  ag.desires.add(atom("p"), 0);
  CHECK(query(ag, Attitude::Knowledge, dnf1(lits({{"p", true}}))));
  CHECK_FALSE(query(ag, Attitude::Knowledge, dnf1(lits({{"q", true}}))));

  // rank 1 wins over rank 2
  AgentProgram ag2 = basic_program();
  ag2.beliefs.add(atom("q"), 1);
  ag2.beliefs.add(neg(atom("q")), 2);
  CHECK(query(ag2, Attitude::Belief, dnf1(lits({{"q", true}}))));
  CHECK_FALSE(query(ag2, Attitude::Belief, dnf1(lits({{"q", false}}))));

  AgentProgram ag3 = basic_program();
  ag3.library = PlanLibrary::make({{"go", Formula::top(), atom("r")}});
  ag3.desires.add(atom("r"), 1);
  ag3.intentions = {"go"};
  CHECK(query(ag3, Attitude::Intention, dnf1(lits({{"r", true}}))));
  // desired but no adopted plan achieves it
  ag3.intentions.clear();
  CHECK_FALSE(query(ag3, Attitude::Intention, dnf1(lits({{"r", true}}))));
  CHECK(query(ag3, Attitude::Goal, dnf1(lits({{"r", true}}))));
}

TEST_CASE("coherence conditions report individually") {
  AgentProgram bad = basic_program();
  bad.knowledge.push_back(Formula::land(atom("p"), neg(atom("p"))));
  bad.beliefs.add(Formula::land(atom("p"), neg(atom("p"))), 0);
  bad.desires.add(Formula::land(atom("p"), neg(atom("p"))), 0);
  CoherenceReport rep = is_coherent(bad);
  CHECK_FALSE(rep.knowledge_consistent);
  CHECK_FALSE(rep.coherent());

  // a pursuable-plan failure: pre(a)=q is not believed
  AgentProgram ag = basic_program();
  ag.library = PlanLibrary::make({{"a", atom("q"), atom("r")}});
  ag.desires.add(atom("r"), 1);
  ag.intentions = {"a"};
  rep = is_coherent(ag);
  CHECK_FALSE(rep.intended_plans_pursuable);
  CHECK(rep.intentions_supported_by_desires);
  CHECK(rep.intended_plans_relevant);

  // empty intentions make conditions 4-7 vacuous
  AgentProgram ok = basic_program();
  ok.knowledge.push_back(atom("p"));
  ok.beliefs.add(atom("p"), 0);
  ok.desires.add(atom("p"), 0);
  rep = is_coherent(ok);
  CHECK(rep.coherent());

  // mirror violations are caught on both bases
  AgentProgram skew = basic_program();
  skew.knowledge.push_back(atom("p"));
  rep = is_coherent(skew);
  CHECK_FALSE(rep.beliefs_mirror_knowledge);
  CHECK_FALSE(rep.desires_mirror_knowledge);
}

TEST_CASE("mirror comparison works on clause sets, not trees") {
  AgentProgram ag = basic_program();
  ag.knowledge.push_back(Formula::land(atom("p"), atom("q")));
  ag.beliefs.add(Formula::land(atom("q"), atom("p")), 0);  // same clause
  ag.desires.add(Formula::land(atom("p"), atom("q")), 0);
  CHECK(is_coherent(ag).coherent());
}

TEST_CASE("generated coherent programs satisfy all conditions") {
  dpl::Rng rng(100);
  GeneratorOptions g;
  g.symbols = 4;
  for (int i = 0; i < 200; ++i) {
    AgentProgram ag = random_coherent_program(rng, g);
    CHECK(is_coherent(ag).coherent());
    // and they survive an agent-file round trip
    std::istringstream in(agent_to_string(ag));
    AgentProgram back = read_agent(in);
    CHECK(agent_to_string(back) == agent_to_string(ag));
  }
}
