#include <doctest.h>

#include "corpus.hpp"
#include "termpred/engine.hpp"
#include "termpred/oracle.hpp"
#include "termpred/parser.hpp"

using namespace termpred;

TEST_CASE("bounded_interpret exhausts finite searches") {
  Program p0 = parse_program(corpus::kP0);
  OracleOutcome o = bounded_interpret(p0, parse_query("p"), 1000);
  CHECK(o.halted);
  CHECK(o.successes == 0);

  Program p1 = parse_program(corpus::kP1);
  OracleOutcome o1 = bounded_interpret(p1, parse_query("p(f(a))"), 1000);
  CHECK(o1.halted);
  CHECK(o1.successes == 1);
}

TEST_CASE("bounded_interpret reports budget exhaustion") {
  Program loop = parse_program("q :- q.\n");
  OracleOutcome o = bounded_interpret(loop, parse_query("q"), 1000);
  CHECK_FALSE(o.halted);
  CHECK(o.steps >= 1000);
}

TEST_CASE("bounded_interpret flounders on non-ground negation") {
  Program p = parse_program("p(X) :- \\+ q(X).\nq(a).\n");
  CHECK_THROWS_AS(bounded_interpret(p, parse_query("p(Y)"), 1000),
                  FlounderError);
}

TEST_CASE("herbrand_terms enumerates ground terms by depth") {
  Program p1 = parse_program(corpus::kP1);
  auto terms = herbrand_terms(p1, 3);
  REQUIRE(terms.size() == 3);
  CHECK(to_string(terms[0]) == "a");
  CHECK(to_string(terms[1]) == "f(a)");
  CHECK(to_string(terms[2]) == "f(f(a))");

  // depth below 1 clamps to the constants
  CHECK(herbrand_terms(p1, 0).size() == 1);

  Program p2 = parse_program(corpus::kP2);
  auto lists = herbrand_terms(p2, 2);
  REQUIRE(lists.size() == 2);  // [] and [[]]
  CHECK(to_string(lists[1]) == "[[]]");

  Program no_const = parse_program("p(X) :- p(f(X)).\n");
  CHECK_THROWS_AS(herbrand_terms(no_const, 2), OracleError);
}

TEST_CASE("sample_forest grounds each input mode over the universe") {
  Program p1 = parse_program(corpus::kP1);
  auto samples = sample_forest(p1, parse_query("p(i)"), 3, 10'000);
  REQUIRE(samples.size() == 3);
  for (const auto& s : samples) {
    CHECK(s.outcome.halted);
    CHECK(s.outcome.successes == 1);
  }

  Program p2 = parse_program(corpus::kP2);
  auto s2 = sample_forest(p2, parse_query("append(o,i,o)"), 2, 10'000);
  REQUIRE(s2.size() == 2);
  for (const auto& s : s2) CHECK_FALSE(s.outcome.halted);

  // two input modes: cartesian product
  Program p3 = parse_program(corpus::kP3);
  auto s3 = sample_forest(p3, parse_query("add(i,i,o)"), 2, 10'000);
  CHECK(s3.size() == 4);

  CHECK_THROWS_AS(sample_forest(p1, parse_query("p(a)"), 2, 100),
                  OracleError);
}

TEST_CASE("oracle and engine agree on success counts of halting goals") {
  struct Case {
    const char* program;
    const char* goal;
  };
  const Case cases[] = {
      {corpus::kP0, "p"},
      {corpus::kP1, "p(f(f(a)))"},
      {corpus::kP2, "append([a,b],[c],Z)"},
      {corpus::kP3, "add(s(0),s(0),Z)"},
      {corpus::kP3, "mult(s(0),s(0),Z)"},
      {corpus::kP4, "subset1([a],[a])"},
  };
  for (const Case& c : cases) {
    Program p = parse_program(c.program);
    Query q = parse_query(c.goal);
    OracleOutcome o = bounded_interpret(p, q, 100'000);
    REQUIRE(o.halted);
    EngineLimits limits;
    limits.max_nodes = 100'000;
    GeneralizedTree t = build_tree(p, q, nullptr, limits);
    REQUIRE(t.outcome == BuildOutcome::Exhausted);
    CHECK(t.main_success_count == o.successes);
  }
}

TEST_CASE("sampled instance derivations are instances of the moded chain") {
  Program p1 = parse_program(corpus::kP1);
  // moded chain: p(I) => p(X_2) => p(X_4) => ... via C_2 at every step
  EngineLimits limits;
  limits.max_nodes = 40;
  TreeBuilder moded(p1, limits, nullptr);
  moded.make_root(parse_query("p(i)"));
  moded.run();
  const GeneralizedTree& mt = moded.tree();

  for (unsigned k = 0; k <= 2; ++k) {
    std::string goal = "p(";
    for (unsigned i = 0; i < k; ++i) goal += "f(";
    goal += "a";
    for (unsigned i = 0; i < k; ++i) goal += ")";
    goal += ")";
    GeneralizedTree it = build_tree(p1, parse_query(goal), nullptr, limits);
    REQUIRE(it.outcome == BuildOutcome::Exhausted);

    // the instance's C_2 chain has exactly k steps, mirroring the moded
    // chain prefix node for node
    NodeId mnode = 0;
    NodeId inode = 0;
    for (unsigned step = 0; step < k; ++step) {
      NodeId mnext = kNoNode;
      for (NodeId ch : mt.at(mnode).children)
        if (mt.at(ch).clause == "C_2") mnext = ch;
      NodeId inext = kNoNode;
      for (NodeId ch : it.at(inode).children)
        if (it.at(ch).clause == "C_2") inext = ch;
      REQUIRE(mnext != kNoNode);
      REQUIRE(inext != kNoNode);
      mnode = mnext;
      inode = inext;
      // moded goal is p(<var>), instance goal is its grounding
      CHECK(mt.at(mnode).goal[0].atom.args[0]->tag == Term::Tag::Var);
      std::string expect = "p(";
      for (unsigned i = 0; i + step + 1 < k; ++i) expect += "f(";
      expect += "a";
      for (unsigned i = 0; i + step + 1 < k; ++i) expect += ")";
      expect += ")";
      CHECK(to_string(it.at(inode).goal[0].atom) == expect);
    }
    // the instance chain ends here: C_1 closes it with a success leaf
    bool success_child = false;
    for (NodeId ch : it.at(inode).children)
      if (it.at(ch).clause == "C_1" && it.at(ch).goal.empty())
        success_child = true;
    CHECK(success_child);
  }
}
