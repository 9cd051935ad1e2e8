#pragma once

#include <optional>

#include "termpred/engine.hpp"
#include "termpred/loop.hpp"
#include "termpred/program.hpp"

#include <json.hpp>

namespace termpred {

enum class Verdict {
  Terminating,
  PredictedTerminating,
  PredictedNonTerminating,
  ResourceExceeded,
};

const char* verdict_name(Verdict v);

enum class Pruning { None, Variants, LoopGoals };

const char* pruning_name(Pruning p);
std::optional<Pruning> pruning_from_name(const std::string& name);

struct PredictorConfig {
  unsigned r = 3;  // repetition number, >= 2
  Pruning pruning = Pruning::Variants;
  EngineLimits limits;
};

struct CutEvent {
  NodeId node;
  std::string clause;
  std::vector<NodeId> positions;
};

struct PruneEvent {
  NodeId node;
  std::string clause;
  NodeId matched;  // the later loop-goal node that already applied it
};

struct WitnessStep {
  NodeId node;
  std::string goal;
  std::string clause;  // clause applied at this node on the derivation
  std::string mgu;
};

struct WitnessReport {
  std::vector<NodeId> positions;
  std::string clause;
  std::vector<WitnessStep> derivation;
};

struct Report {
  Verdict verdict = Verdict::Terminating;
  unsigned r = 3;
  Pruning pruning = Pruning::Variants;
  std::size_t node_count = 0;
  double elapsed_ms = 0.0;
  std::optional<WitnessReport> witness;  // predicted-non-terminating only
  std::vector<CutEvent> cuts;
  std::vector<PruneEvent> prunes;
  bool inferred = false;
  std::string query;
  std::shared_ptr<const GeneralizedTree> tree;  // for trace export
};

// Builds the (moded) generalized SLDNF-tree under LP-check with repetition
// number cfg.r.  A repetition prefix without the term-size decrease property
// stops everything with predicted-non-terminating; one with it cuts the
// looping clause and continues.  Exhaustion yields terminating when no cut
// fired, predicted-terminating otherwise.  Throws FlounderError.
Report predict(const Program& p, const Query& q, const PredictorConfig& cfg);

// Clause labels to skip at `node` during backtracking: clauses already
// applied at a later loop-goal node whose selected subgoal is a variant
// (Pruning::Variants, symbol-string test) or any loop goal
// (Pruning::LoopGoals).
std::vector<std::string> prune_filter(const GeneralizedTree& t, NodeId node,
                                      Pruning mode);

// All 2^n - 1 input-mode patterns for every n-ary predicate of p.
std::vector<Query> most_general_moded_queries(const Program& p);

struct ModeVerdict {
  Query query;
  std::optional<Verdict> verdict;
  bool inferred = false;
};

// A query whose input-mode positions contain those of a (predicted-)
// terminating query of the same predicate inherits that verdict.  Only
// fills unassigned entries; never infers from non-terminating verdicts.
void infer_by_mode_subsumption(std::vector<ModeVerdict>& entries);

// Runs predict over most_general_moded_queries, skipping queries whose
// verdict mode subsumption already settles.
std::vector<Report> run_all_modes(const Program& p,
                                  const PredictorConfig& cfg);

nlohmann::json report_to_json(const Report& r);
std::string report_to_text(const Report& r);

}  // namespace termpred
