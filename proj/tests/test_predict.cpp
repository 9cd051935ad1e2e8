#include <doctest.h>

#include <set>

#include "corpus.hpp"
#include "termpred/parser.hpp"
#include "termpred/predict.hpp"

#include <json.hpp>

using namespace termpred;

namespace {

Report run(const std::string& program, const std::string& query, unsigned r,
           Pruning pruning = Pruning::Variants) {
  return predict(parse_program(program), parse_query(query),
                 corpus::test_config(r, pruning));
}

}  // namespace

TEST_CASE("verdict spot checks") {
  CHECK(run(corpus::kP1, "p(i)", 3).verdict ==
        Verdict::PredictedTerminating);
  CHECK(run(corpus::kP0, "p", 3).verdict == Verdict::Terminating);
  CHECK(run(corpus::kP2, "append(o,i,o)", 3).verdict ==
        Verdict::PredictedNonTerminating);
}

TEST_CASE("the verdict is terminating exactly when no cut fired") {
  for (const auto& g : corpus::golden_cases()) {
    Report rep = run(g.program_text, g.query, 3, Pruning::None);
    if (rep.verdict == Verdict::Terminating) CHECK(rep.cuts.empty());
    if (rep.verdict == Verdict::PredictedTerminating)
      CHECK_FALSE(rep.cuts.empty());
  }
}

TEST_CASE("predicted-non-terminating reports carry one failing witness") {
  for (const auto& g : corpus::golden_cases()) {
    Report rep = run(g.program_text, g.query, 3, Pruning::None);
    if (rep.verdict != Verdict::PredictedNonTerminating) {
      CHECK_FALSE(rep.witness.has_value());
      continue;
    }
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->positions.size() == 3);
    CHECK_FALSE(has_term_size_decrease(
        *rep.tree, LpWitness{rep.witness->positions, rep.witness->clause}));
    // the witness derivation renders the whole root-to-cut path
    CHECK(rep.witness->derivation.front().node == 0);
    CHECK(rep.witness->derivation.back().node == rep.witness->positions.back());
  }
}

TEST_CASE("resource-exceeded surfaces as a verdict") {
  PredictorConfig cfg = corpus::test_config(3, Pruning::None);
  cfg.limits.max_nodes = 3;
  Report rep = predict(parse_program(corpus::kP4), parse_query("subset1(o,i)"),
                       cfg);
  CHECK(rep.verdict == Verdict::ResourceExceeded);
}

TEST_CASE("floundering is an error, not a verdict") {
  CHECK_THROWS_AS(run("p(X) :- \\+ q(X).\nq(a).\n", "p(i)", 3),
                  FlounderError);
}

TEST_CASE("a looping subsidiary proof stops the whole analysis") {
  // proving q loops, so the \+ q subproof never finishes
  Report rep = run("p :- \\+ q.\nq :- q.\n", "p", 3);
  REQUIRE(rep.verdict == Verdict::PredictedNonTerminating);
  // the witness chain lies inside the subsidiary tree
  REQUIRE(rep.witness.has_value());
  const GeneralizedTree& t = *rep.tree;
  for (NodeId pos : rep.witness->positions) CHECK(t.at(pos).tree != kMainTree);
}

TEST_CASE("recursion running through negation steps is caught") {
  // each round proves \+ q (q finitely fails) and recurses on p
  Report rep = run("p :- \\+ q, p.\nq :- r.\n", "p", 3);
  CHECK(rep.verdict == Verdict::PredictedNonTerminating);
  CHECK(rep.tree->tree_count > 2);  // one subsidiary tree per round
}

TEST_CASE("a repetition number below 2 is rejected") {
  PredictorConfig cfg = corpus::test_config(3, Pruning::None);
  cfg.r = 1;
  CHECK_THROWS_AS(
      predict(parse_program(corpus::kP1), parse_query("p(i)"), cfg),
      std::invalid_argument);
}

TEST_CASE("prune_filter collects clauses applied at later variant loop goals") {
  Report rep = run(corpus::kP6, "f(i)", 3, Pruning::Variants);
  const GeneralizedTree& t = *rep.tree;
  // f(X) at node 2 has the later variant loop goal f(X1) at node 4 with C_2
  CHECK(prune_filter(t, 2, Pruning::Variants) ==
        std::vector<std::string>{"C_2"});
  // below the root, C_1 was applied at node 2 and C_2 at nodes 4 and 5
  std::set<std::string> at_root;
  for (const auto& label : prune_filter(t, 0, Pruning::Variants))
    at_root.insert(label);
  CHECK(at_root == std::set<std::string>{"C_1", "C_2"});
  CHECK(prune_filter(t, 2, Pruning::None).empty());

  // no loop-goal pair, nothing to skip
  Report rep0 = run(corpus::kP0, "p", 3, Pruning::Variants);
  CHECK(prune_filter(*rep0.tree, 0, Pruning::Variants).empty());
}

TEST_CASE("prune events land on the nodes with variant selected subgoals") {
  Report rep = run(corpus::kP6, "f(i)", 3, Pruning::Variants);
  std::set<NodeId> pruned_at;
  for (const auto& pe : rep.prunes) pruned_at.insert(pe.node);
  CHECK(pruned_at == std::set<NodeId>{0, 2});
}

TEST_CASE("most_general_moded_queries enumerates every input pattern") {
  CHECK(most_general_moded_queries(parse_program(corpus::kP3)).size() == 14);
  CHECK(most_general_moded_queries(parse_program(corpus::kP1)).size() == 1);
  CHECK(most_general_moded_queries(parse_program(corpus::kP2)).size() == 7);
  Program binary = parse_program("r(a,b).\n");
  auto qs = most_general_moded_queries(binary);
  REQUIRE(qs.size() == 3);
  // zero-arity predicates admit no moded query
  CHECK(most_general_moded_queries(parse_program(corpus::kP0)).empty());
}

TEST_CASE("mode subsumption infers only from terminating-side verdicts") {
  Program p3 = parse_program(corpus::kP3);
  std::vector<Query> qs = most_general_moded_queries(p3);
  auto find = [&](const std::string& text) -> Query {
    for (const auto& q : qs)
      if (q.text() == text) return q;
    REQUIRE(false);
    return qs[0];
  };

  std::vector<ModeVerdict> table;
  table.push_back({find("mult(i,i,V3)"), Verdict::PredictedTerminating});
  table.push_back({find("mult(i,i,i)"), std::nullopt});
  table.push_back({find("add(V1,i,V3)"), Verdict::PredictedNonTerminating});
  table.push_back({find("add(i,i,V3)"), std::nullopt});
  infer_by_mode_subsumption(table);
  REQUIRE(table[1].verdict.has_value());
  CHECK(*table[1].verdict == Verdict::PredictedTerminating);
  CHECK(table[1].inferred);
  CHECK_FALSE(table[3].verdict.has_value());  // no inference from PNT

  std::vector<ModeVerdict> empty;
  infer_by_mode_subsumption(empty);
  CHECK(empty.empty());
}

TEST_CASE("run_all_modes computes or infers every query") {
  auto reports = run_all_modes(parse_program(corpus::kP3),
                               corpus::test_config(3, Pruning::Variants));
  REQUIRE(reports.size() == 14);
  std::size_t inferred = 0;
  for (const auto& rep : reports) {
    CHECK((rep.verdict == Verdict::PredictedTerminating ||
           rep.verdict == Verdict::PredictedNonTerminating));
    inferred += rep.inferred ? 1 : 0;
  }
  CHECK(inferred > 0);
  // mult(i,i,i) is settled by mult(i,i,V3)
  for (const auto& rep : reports)
    if (rep.query == "mult(i,i,i)") {
      CHECK(rep.inferred);
      CHECK(rep.verdict == Verdict::PredictedTerminating);
    }
}

TEST_CASE("report json carries the documented shape") {
  Report rep = run(corpus::kP2, "append(o,i,o)", 3);
  nlohmann::json j = report_to_json(rep);
  CHECK(j["verdict"] == "predicted-non-terminating");
  CHECK(j["r"] == 3);
  CHECK(j["pruning"] == "variants");
  CHECK(j.contains("nodeCount"));
  CHECK(j.contains("elapsedMs"));
  CHECK(j["witness"].is_object());
  CHECK(j["witness"]["positions"].size() == 3);
  CHECK(j["witness"]["derivation"].is_array());
  for (const auto& step : j["witness"]["derivation"]) {
    CHECK(step.contains("nodeId"));
    CHECK(step.contains("goal"));
    CHECK(step.contains("clause"));
    CHECK(step.contains("mgu"));
  }
  CHECK(j["cuts"].is_array());
  CHECK(j["prunes"].is_array());

  Report rep2 = run(corpus::kP1, "p(i)", 3);
  nlohmann::json j2 = report_to_json(rep2);
  CHECK(j2["verdict"] == "predicted-terminating");
  CHECK(j2["witness"].is_null());
  CHECK(j2["cuts"].size() == 1);
}
