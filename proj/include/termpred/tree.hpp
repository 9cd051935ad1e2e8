#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "termpred/program.hpp"
#include "termpred/subst.hpp"
#include "termpred/term.hpp"

namespace termpred {

using NodeId = std::uint32_t;
using TreeIx = std::uint32_t;  // 0 = main tree, >0 subsidiary trees

inline constexpr NodeId kNoNode = 0xffffffffu;
inline constexpr TreeIx kMainTree = 0;

// Chain of selected-subgoal occurrences this literal's proof goes through.
// Chains are shared between literals; entries are strictly earlier nodes of
// the same derivation.
struct AncestorLink;
using AncestorChain = std::shared_ptr<const AncestorLink>;
struct AncestorLink {
  NodeId node;
  AncestorChain next;
};

AncestorChain anc_push(const AncestorChain& chain, NodeId node);
bool anc_contains(const AncestorChain& chain, NodeId node);

struct Literal {
  bool negative = false;
  Atom atom;
  AncestorChain ancestors;
};

// Selected subgoal is always position 0 (left-most).
using Goal = std::vector<Literal>;

std::string to_string(const Goal& g);

enum class EdgeKind {
  Root,
  Clause,            // derivation step; clause label + mgu attached
  NegationArc,       // parent selects a negative literal, child is the
                     // subsidiary tree root
  NegationSuccess,   // negative literal finitely failed to prove; goal
                     // continues with the rest
};

enum class NodeStatus {
  Open,        // not yet fully processed
  Success,     // empty goal
  Failure,     // non-empty goal, no child survives
  CutLeaf,     // all remaining clauses removed by cuts/pruning
  Unexpanded,  // sibling of a subsidiary-tree success leaf
  Flounder,    // selected a non-ground negative subgoal
};

struct SkipRecord {
  enum class Why { LoopCheck, Prune, Observer };
  std::string clause;
  Why why;
};

struct Node {
  NodeId id = 0;
  TreeIx tree = kMainTree;
  NodeId parent = kNoNode;
  EdgeKind edge = EdgeKind::Root;
  std::string clause;  // EdgeKind::Clause only
  Substitution mgu;    // EdgeKind::Clause only
  Goal goal;
  VarKinds kinds;      // input-variable snapshot at this node
  NodeStatus status = NodeStatus::Open;
  std::uint32_t depth = 0;
  std::uint32_t occurs_failures = 0;  // clause heads rejected by occurs check
  std::vector<NodeId> children;
  std::vector<SkipRecord> skipped;

  const Literal* selected() const { return goal.empty() ? nullptr : &goal[0]; }
};

enum class BuildOutcome {
  Exhausted,         // every branch closed
  Halted,            // a controller requested a stop
  ResourceExceeded,  // node/depth/time limit hit
  Floundered,
};

struct EngineLimits {
  std::size_t max_nodes = 1'000'000;
  std::uint32_t max_depth = 20'000;  // derivation length, keeps terms sane
  double timeout_seconds = 240.0;
};

struct GeneralizedTree {
  std::vector<Node> nodes;
  TreeIx tree_count = 1;
  BuildOutcome outcome = BuildOutcome::Exhausted;
  std::string halt_tag;             // set when outcome == Halted
  NodeId flounder_node = kNoNode;   // set when outcome == Floundered
  std::size_t main_success_count = 0;

  const Node& at(NodeId id) const { return nodes[id]; }
  // Root-to-node path, crossing negation arcs.
  std::vector<NodeId> derivation_to(NodeId id) const;
  // All maximal derivations (paths from the main root to leaves).
  std::vector<std::vector<NodeId>> derivations() const;
};

}  // namespace termpred
