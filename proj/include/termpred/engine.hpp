#pragma once

#include <memory>
#include <stdexcept>

#include "termpred/program.hpp"
#include "termpred/tree.hpp"

namespace termpred {

struct FlounderError : std::runtime_error {
  NodeId node;
  std::string literal;

  FlounderError(NodeId n, const std::string& lit)
      : std::runtime_error(
            "floundering: non-ground negative subgoal \\+" + lit +
            " selected" +
            (n == kNoNode ? "" : " (node " + std::to_string(n) + ")")),
        node(n),
        literal(lit) {}
};

// Decision for one clause application about to happen at a node.
struct ClauseDecision {
  enum class Act { Apply, Skip, Halt };
  Act act = Act::Apply;
  SkipRecord::Why why = SkipRecord::Why::Observer;
  std::string halt_tag;

  static ClauseDecision apply() { return {}; }
  static ClauseDecision skip(SkipRecord::Why w) {
    return {Act::Skip, w, {}};
  }
  static ClauseDecision halt(std::string tag) {
    return {Act::Halt, SkipRecord::Why::Observer, std::move(tag)};
  }
};

// Decision after a derivation step created a node.
struct StepDecision {
  enum class Act { Continue, CutHere, Halt };
  Act act = Act::Continue;
  std::string halt_tag;

  static StepDecision go() { return {}; }
  static StepDecision cut_here() { return {Act::CutHere, {}}; }
  static StepDecision halt(std::string tag) {
    return {Act::Halt, std::move(tag)};
  }
};

// Observes construction step by step.  before_clause runs once per
// unifiable clause, before the child node exists; after_step runs once per
// created node with the full derivation available through the tree.
class StepController {
 public:
  virtual ~StepController() = default;
  virtual ClauseDecision before_clause(const GeneralizedTree&, NodeId,
                                       const Clause&) {
    return ClauseDecision::apply();
  }
  virtual StepDecision after_step(const GeneralizedTree&, NodeId) {
    return StepDecision::go();
  }
};

// Depth-first left-most construction of the generalized SLDNF-tree for a
// query.  The main tree is fully backtracked; subsidiary trees stop at their
// first success leaf.  Node ids follow visitation order.  Throws
// FlounderError when a non-ground negative subgoal gets selected.
GeneralizedTree build_tree(const Program& p, const Query& q,
                           StepController* controller,
                           const EngineLimits& limits);

// Incremental builder; exposes single-node expansion for direct use.
class TreeBuilder {
 public:
  TreeBuilder(const Program& p, const EngineLimits& limits,
              StepController* controller);
  ~TreeBuilder();

  NodeId make_root(const Query& q);
  // Applies every applicable clause at an open node at once and returns the
  // created children.  Drives neither negation nor backtracking.
  std::vector<NodeId> expand(NodeId node);
  // Full depth-first construction from the root made by make_root.
  void run();

  const GeneralizedTree& tree() const;
  GeneralizedTree take();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace termpred
