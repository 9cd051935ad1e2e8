#include "termpred/engine.hpp"

#include <cassert>
#include <chrono>
#include <sstream>

#include "termpred/unify.hpp"

namespace termpred {

AncestorChain anc_push(const AncestorChain& chain, NodeId node) {
  return std::make_shared<AncestorLink>(AncestorLink{node, chain});
}

bool anc_contains(const AncestorChain& chain, NodeId node) {
  for (const AncestorLink* p = chain.get(); p; p = p->next.get())
    if (p->node == node) return true;
  return false;
}

std::string to_string(const Goal& g) {
  if (g.empty()) return "□";
  std::ostringstream os;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) os << ", ";
    if (g[i].negative) os << "\\+ ";
    os << to_string(g[i].atom);
  }
  return os.str();
}

std::vector<NodeId> GeneralizedTree::derivation_to(NodeId id) const {
  std::vector<NodeId> path;
  for (NodeId cur = id; cur != kNoNode; cur = nodes[cur].parent)
    path.push_back(cur);
  return {path.rbegin(), path.rend()};
}

std::vector<std::vector<NodeId>> GeneralizedTree::derivations() const {
  std::vector<std::vector<NodeId>> out;
  for (const Node& n : nodes)
    if (n.children.empty()) out.push_back(derivation_to(n.id));
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

std::string input_var_name(std::size_t index, std::size_t total) {
  return total == 1 ? "I" : "I" + std::to_string(index + 1);
}

}  // namespace

struct TreeBuilder::Impl {
  const Program& program;
  EngineLimits limits;
  StepController* controller;

  GeneralizedTree tree;
  VarGen gen;
  NodeId root = kNoNode;
  Clock::time_point started = Clock::now();
  bool stopped = false;

  struct Frame {
    NodeId node;
    std::size_t clause_ix = 0;
    enum class St { Work, NegWait, Done } st = St::Work;
  };
  struct SubCtx {
    TreeIx tree;
    std::size_t neg_frame;  // index into stack of the dispatching frame
    bool success = false;
  };
  std::vector<Frame> stack;
  std::vector<SubCtx> subs;

  Impl(const Program& p, const EngineLimits& lim, StepController* ctl)
      : program(p), limits(lim), controller(ctl) {}

  bool over_time() {
    return std::chrono::duration<double>(Clock::now() - started).count() >
           limits.timeout_seconds;
  }

  // Returns kNoNode and marks the build resource-exceeded when a limit is
  // hit.
  NodeId add_node(NodeId parent, EdgeKind edge, TreeIx tx, Goal goal,
                  VarKinds kinds, std::string clause, Substitution mgu) {
    std::uint32_t depth = parent == kNoNode ? 0 : tree.nodes[parent].depth + 1;
    if (tree.nodes.size() >= limits.max_nodes || depth > limits.max_depth ||
        ((tree.nodes.size() & 0x3f) == 0 && over_time())) {
      tree.outcome = BuildOutcome::ResourceExceeded;
      stopped = true;
      return kNoNode;
    }
    Node n;
    n.id = static_cast<NodeId>(tree.nodes.size());
    n.tree = tx;
    n.parent = parent;
    n.edge = edge;
    n.clause = std::move(clause);
    n.mgu = std::move(mgu);
    n.goal = std::move(goal);
    n.kinds = std::move(kinds);
    n.depth = depth;
    NodeId id = n.id;
    tree.nodes.push_back(std::move(n));
    if (parent != kNoNode) tree.nodes[parent].children.push_back(id);
    return id;
  }

  NodeId make_root(const Query& q) {
    gen.next = std::max(program.max_var, q.max_var) + 1;
    std::size_t input_total = 0;
    for (const auto& a : q.args) input_total += a.input_mode ? 1 : 0;
    Atom atom;
    atom.pred = q.pred;
    std::vector<VarId> inputs;
    std::size_t seen = 0;
    for (const auto& a : q.args) {
      if (a.input_mode) {
        VarId v = gen.fresh();
        inputs.push_back(v);
        atom.args.push_back(
            Term::make_var(v, input_var_name(seen++, input_total)));
      } else {
        atom.args.push_back(a.term);
      }
    }
    Goal g{Literal{false, std::move(atom), nullptr}};
    root = add_node(kNoNode, EdgeKind::Root, kMainTree, std::move(g),
                    VarKinds::none().with_input(inputs), {}, {});
    return root;
  }

  struct Child {
    NodeId id = kNoNode;
    bool halted = false;
    bool skipped = false;
    bool created = false;
  };

  // One derivation step: renames the clause, unifies with the selected
  // subgoal, consults the controller and materializes the resolvent.
  Child try_clause(NodeId at, const Clause& c, bool consult) {
    Child out;
    Node& n = tree.nodes[at];
    const Literal& sel = n.goal[0];
    VarId base = gen.next;
    std::string tag = std::to_string(tree.nodes.size());
    Clause rc = rename_apart(c, gen, tag);
    UnifyOutcome u = unify(sel.atom, rc.head, n.kinds, base);
    if (!u.ok) {
      if (u.fail == UnifyFail::OccursCheck) ++tree.nodes[at].occurs_failures;
      return out;
    }
    if (consult && controller) {
      ClauseDecision d = controller->before_clause(tree, at, c);
      if (d.act == ClauseDecision::Act::Skip) {
        tree.nodes[at].skipped.push_back({c.label, d.why});
        out.skipped = true;
        return out;
      }
      if (d.act == ClauseDecision::Act::Halt) {
        halt(d.halt_tag);
        out.halted = true;
        return out;
      }
    }
    AncestorChain body_anc = anc_push(sel.ancestors, at);
    Goal child_goal;
    child_goal.reserve(rc.body.size() + n.goal.size() - 1);
    for (const auto& lit : rc.body)
      child_goal.push_back({lit.negative, apply(u.mgu, lit.atom), body_anc});
    for (std::size_t i = 1; i < n.goal.size(); ++i)
      child_goal.push_back({n.goal[i].negative, apply(u.mgu, n.goal[i].atom),
                            n.goal[i].ancestors});
    out.id = add_node(at, EdgeKind::Clause, n.tree, std::move(child_goal),
                      u.kinds, c.label, std::move(u.mgu));
    out.created = out.id != kNoNode;
    return out;
  }

  void halt(std::string tag) {
    tree.outcome = BuildOutcome::Halted;
    tree.halt_tag = std::move(tag);
    stopped = true;
  }

  void flounder(NodeId at) {
    tree.nodes[at].status = NodeStatus::Flounder;
    tree.outcome = BuildOutcome::Floundered;
    tree.flounder_node = at;
    stopped = true;
  }

  // The first success leaf of a subsidiary tree stops that tree: remaining
  // clauses of the leaf's parent become unexpanded siblings, everything
  // deeper is abandoned.
  void subsidiary_success() {
    SubCtx& ctx = subs.back();
    ctx.success = true;
    Frame& pf = stack[stack.size() - 2];
    Node& pn = tree.nodes[pf.node];
    const Literal* sel = pn.selected();
    if (sel && !sel->negative) {
      const auto* ixs = program.clauses_for(sel->atom.pred, sel->atom.arity());
      std::size_t count = ixs ? ixs->size() : 0;
      for (std::size_t k = pf.clause_ix; k < count && !stopped; ++k) {
        Child ch = try_clause(pf.node, program.clauses[(*ixs)[k]],
                              /*consult=*/false);
        if (ch.created) tree.nodes[ch.id].status = NodeStatus::Unexpanded;
      }
    }
    stack.resize(ctx.neg_frame + 1);
  }

  void close(Node& n) {
    if (n.children.empty())
      n.status =
          n.skipped.empty() ? NodeStatus::Failure : NodeStatus::CutLeaf;
  }

  void run() {
    assert(root != kNoNode);
    stack.push_back({root});
    while (!stack.empty() && !stopped) {
      Frame& f = stack.back();
      Node& n = tree.nodes[f.node];

      if (f.st == Frame::St::Done) {
        stack.pop_back();
        continue;
      }

      if (n.goal.empty()) {
        n.status = NodeStatus::Success;
        if (n.tree == kMainTree) {
          ++tree.main_success_count;
          stack.pop_back();
        } else {
          subsidiary_success();
        }
        continue;
      }

      const Literal& sel = n.goal[0];
      if (sel.negative) {
        if (f.st == Frame::St::Work) {
          if (!is_ground(sel.atom)) {
            flounder(f.node);
            break;
          }
          Goal sub_goal{Literal{false, sel.atom, sel.ancestors}};
          TreeIx tx = tree.tree_count++;
          NodeId sub = add_node(f.node, EdgeKind::NegationArc, tx,
                                std::move(sub_goal), n.kinds, {}, {});
          if (sub == kNoNode) break;
          f.st = Frame::St::NegWait;
          subs.push_back({tx, stack.size() - 1});
          if (controller) {
            StepDecision s = controller->after_step(tree, sub);
            if (s.act == StepDecision::Act::Halt) {
              halt(s.halt_tag);
              break;
            }
            if (s.act == StepDecision::Act::CutHere) {
              tree.nodes[sub].status = NodeStatus::CutLeaf;
              continue;  // subsidiary not explored; counts as no success
            }
          }
          stack.push_back({sub});
          continue;
        }
        // subsidiary finished
        SubCtx ctx = subs.back();
        subs.pop_back();
        if (ctx.success) {
          // \+ A fails with A provable: the branch dies here
          n.status = NodeStatus::Failure;
          stack.pop_back();
        } else {
          Goal rest(n.goal.begin() + 1, n.goal.end());
          NodeId child = add_node(f.node, EdgeKind::NegationSuccess, n.tree,
                                  std::move(rest), n.kinds, {}, {});
          if (child == kNoNode) break;
          f.st = Frame::St::Done;
          if (controller) {
            StepDecision s = controller->after_step(tree, child);
            if (s.act == StepDecision::Act::Halt) {
              halt(s.halt_tag);
              break;
            }
            if (s.act == StepDecision::Act::CutHere) {
              tree.nodes[child].status = NodeStatus::CutLeaf;
              continue;
            }
          }
          stack.push_back({child});
        }
        continue;
      }

      // positive selected subgoal: apply clauses in source order
      const auto* ixs = program.clauses_for(sel.atom.pred, sel.atom.arity());
      std::size_t count = ixs ? ixs->size() : 0;
      bool descended = false;
      while (f.clause_ix < count) {
        const Clause& c = program.clauses[(*ixs)[f.clause_ix]];
        ++f.clause_ix;
        Child ch = try_clause(f.node, c, /*consult=*/true);
        if (stopped) break;
        if (!ch.created) continue;
        if (controller) {
          StepDecision s = controller->after_step(tree, ch.id);
          if (s.act == StepDecision::Act::Halt) {
            halt(s.halt_tag);
            break;
          }
          if (s.act == StepDecision::Act::CutHere) {
            tree.nodes[ch.id].status = NodeStatus::CutLeaf;
            continue;
          }
        }
        stack.push_back({ch.id});
        descended = true;
        break;
      }
      if (stopped) break;
      if (descended) continue;
      close(tree.nodes[f.node]);
      stack.pop_back();
    }
  }
};

TreeBuilder::TreeBuilder(const Program& p, const EngineLimits& limits,
                         StepController* controller)
    : impl_(std::make_unique<Impl>(p, limits, controller)) {}

TreeBuilder::~TreeBuilder() = default;

NodeId TreeBuilder::make_root(const Query& q) { return impl_->make_root(q); }

std::vector<NodeId> TreeBuilder::expand(NodeId node) {
  std::vector<NodeId> out;
  const Node& n = impl_->tree.nodes[node];
  if (n.goal.empty() || n.goal[0].negative) return out;
  const Atom& sel = n.goal[0].atom;
  const auto* ixs = impl_->program.clauses_for(sel.pred, sel.arity());
  if (!ixs) {
    impl_->tree.nodes[node].status = NodeStatus::Failure;
    return out;
  }
  for (std::size_t ix : *ixs) {
    auto ch = impl_->try_clause(node, impl_->program.clauses[ix],
                                /*consult=*/false);
    if (ch.created) out.push_back(ch.id);
  }
  if (out.empty()) impl_->tree.nodes[node].status = NodeStatus::Failure;
  return out;
}

void TreeBuilder::run() { impl_->run(); }

const GeneralizedTree& TreeBuilder::tree() const { return impl_->tree; }

GeneralizedTree TreeBuilder::take() { return std::move(impl_->tree); }

GeneralizedTree build_tree(const Program& p, const Query& q,
                           StepController* controller,
                           const EngineLimits& limits) {
  TreeBuilder b(p, limits, controller);
  b.make_root(q);
  b.run();
  GeneralizedTree t = b.take();
  if (t.outcome == BuildOutcome::Floundered) {
    const Node& n = t.at(t.flounder_node);
    throw FlounderError(n.id, to_string(n.goal[0].atom));
  }
  return t;
}

}  // namespace termpred
