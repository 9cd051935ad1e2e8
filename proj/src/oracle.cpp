#include "termpred/oracle.hpp"

#include <map>
#include <unordered_map>

namespace termpred {

namespace {

// Lazy triangular substitution; terms stay unapplied and get resolved
// through the map on demand.  Backtracking undoes bindings through a trail
// instead of copying the map.
using Bind = std::unordered_map<VarId, TermPtr>;

TermPtr walk(const Bind& b, TermPtr t) {
  while (t->tag == Term::Tag::Var) {
    auto it = b.find(t->var);
    if (it == b.end()) break;
    t = it->second;
  }
  return t;
}

TermPtr resolve(const Bind& b, const TermPtr& t) {
  TermPtr w = walk(b, t);
  if (w->tag != Term::Tag::Func) return w;
  std::vector<TermPtr> args;
  args.reserve(w->args.size());
  for (const auto& a : w->args) args.push_back(resolve(b, a));
  return Term::make_func(w->name, std::move(args));
}

enum class UStep { Ok, Fail, OverBudget };

// Iterative occurs check; walking bound structure charges the work meter so
// derivations that build ever-deeper terms cannot stall the oracle.
UStep occurs(const Bind& b, VarId v, const TermPtr& t, std::size_t& work,
             std::size_t work_cap, bool* found) {
  std::vector<const Term*> todo{t.get()};
  while (!todo.empty()) {
    const Term* cur = todo.back();
    todo.pop_back();
    while (cur->tag == Term::Tag::Var) {
      if (++work > work_cap) return UStep::OverBudget;
      auto it = b.find(cur->var);
      if (it == b.end()) break;
      cur = it->second.get();
    }
    if (++work > work_cap) return UStep::OverBudget;
    if (cur->tag == Term::Tag::Var) {
      if (cur->var == v) {
        *found = true;
        return UStep::Ok;
      }
      continue;
    }
    for (const auto& a : cur->args) todo.push_back(a.get());
  }
  *found = false;
  return UStep::Ok;
}

UStep mini_unify(Bind& b, std::vector<VarId>& trail, const TermPtr& ta,
                 const TermPtr& tb, std::size_t& work,
                 std::size_t work_cap) {
  TermPtr a = walk(b, ta);
  TermPtr c = walk(b, tb);
  if (a->tag == Term::Tag::Var && c->tag == Term::Tag::Var &&
      a->var == c->var)
    return UStep::Ok;
  if (a->tag == Term::Tag::Var || c->tag == Term::Tag::Var) {
    const TermPtr& var = a->tag == Term::Tag::Var ? a : c;
    const TermPtr& val = a->tag == Term::Tag::Var ? c : a;
    bool found = false;
    UStep s = occurs(b, var->var, val, work, work_cap, &found);
    if (s != UStep::Ok) return s;
    if (found) return UStep::Fail;
    b[var->var] = val;
    trail.push_back(var->var);
    return UStep::Ok;
  }
  if (a->tag == Term::Tag::Const && c->tag == Term::Tag::Const)
    return a->name == c->name ? UStep::Ok : UStep::Fail;
  if (a->tag == Term::Tag::Func && c->tag == Term::Tag::Func) {
    if (a->name != c->name || a->args.size() != c->args.size())
      return UStep::Fail;
    for (std::size_t i = 0; i < a->args.size(); ++i) {
      UStep s = mini_unify(b, trail, a->args[i], c->args[i], work, work_cap);
      if (s != UStep::Ok) return s;
    }
    return UStep::Ok;
  }
  return UStep::Fail;
}

struct OLit {
  bool negative;
  Atom atom;
};

// Goals are shared suffix lists so a derivation step costs the clause body,
// not the whole resolvent.
struct GoalNode;
using GoalList = std::shared_ptr<const GoalNode>;
struct GoalNode {
  OLit lit;
  GoalList next;
};

GoalList goal_cons(OLit lit, GoalList next) {
  return std::make_shared<GoalNode>(GoalNode{std::move(lit), std::move(next)});
}

Atom resolve_atom(const Bind& b, const Atom& a) {
  Atom out;
  out.pred = a.pred;
  out.args.reserve(a.args.size());
  for (const auto& t : a.args) out.args.push_back(resolve(b, t));
  return out;
}

struct Interp {
  const Program& program;
  std::size_t budget;
  std::size_t steps = 0;
  std::size_t work = 0;      // unification effort, charged against work_cap
  std::size_t work_cap = 0;  // 64 units of term traversal per budgeted step
  VarId next_var;

  explicit Interp(const Program& p, std::size_t budget_limit)
      : program(p),
        budget(budget_limit),
        work_cap(budget_limit * 64),
        next_var(p.max_var + 1) {}

  bool spend() {
    if (steps >= budget || work > work_cap) return false;
    ++steps;
    return true;
  }

  TermPtr rename(const TermPtr& t, std::unordered_map<VarId, TermPtr>& m) {
    switch (t->tag) {
      case Term::Tag::Var: {
        auto it = m.find(t->var);
        if (it != m.end()) return it->second;
        TermPtr v = Term::make_var(next_var, t->name + "~" +
                                                 std::to_string(next_var));
        ++next_var;
        m.emplace(t->var, v);
        return v;
      }
      case Term::Tag::Const:
        return t;
      case Term::Tag::Func: {
        std::vector<TermPtr> args;
        args.reserve(t->args.size());
        for (const auto& a : t->args) args.push_back(rename(a, m));
        return Term::make_func(t->name, std::move(args));
      }
    }
    return t;
  }

  struct Frame {
    GoalList goal;
    std::size_t clause_ix = 0;
    std::size_t undo_mark = 0;  // trail length before the step into this frame
  };

  // Depth-first run with one shared binding map per search; popping a frame
  // undoes its step's bindings.  When first_only is set, stops at the first
  // success.  Returns false when the budget ran out.
  bool search(GoalList goal, bool first_only, std::size_t* successes) {
    Bind bind;
    std::vector<VarId> trail;
    auto undo_to = [&](std::size_t mark) {
      while (trail.size() > mark) {
        bind.erase(trail.back());
        trail.pop_back();
      }
    };

    std::vector<Frame> stack;
    stack.push_back({std::move(goal), 0, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (!f.goal) {
        ++*successes;
        if (first_only) return true;
        undo_to(f.undo_mark);
        stack.pop_back();
        continue;
      }
      const OLit& sel = f.goal->lit;
      if (sel.negative) {
        Atom ground_atom = resolve_atom(bind, sel.atom);
        if (!is_ground(ground_atom))
          throw FlounderError(kNoNode, to_string(ground_atom));
        std::size_t sub_successes = 0;
        if (!search(goal_cons({false, ground_atom}, nullptr),
                    /*first_only=*/true, &sub_successes))
          return false;
        std::size_t mark = f.undo_mark;
        if (sub_successes > 0) {
          undo_to(mark);
          stack.pop_back();  // \+ A fails
          continue;
        }
        if (!spend()) return false;
        GoalList rest = f.goal->next;
        stack.pop_back();
        stack.push_back({std::move(rest), 0, mark});
        continue;
      }
      const auto* ixs =
          program.clauses_for(sel.atom.pred, sel.atom.arity());
      std::size_t count = ixs ? ixs->size() : 0;
      bool descended = false;
      while (f.clause_ix < count) {
        const Clause& c = program.clauses[(*ixs)[f.clause_ix]];
        ++f.clause_ix;
        std::size_t mark = trail.size();
        std::unordered_map<VarId, TermPtr> rm;
        Atom head;
        head.pred = c.head.pred;
        for (const auto& t : c.head.args) head.args.push_back(rename(t, rm));
        UStep step = UStep::Ok;
        for (std::size_t i = 0; step == UStep::Ok && i < head.args.size();
             ++i)
          step = mini_unify(bind, trail, sel.atom.args[i], head.args[i],
                            work, work_cap);
        if (step == UStep::OverBudget) return false;
        if (step == UStep::Fail) {
          undo_to(mark);
          continue;
        }
        if (!spend()) return false;
        GoalList child = f.goal->next;
        for (auto it = c.body.rbegin(); it != c.body.rend(); ++it) {
          Atom a;
          a.pred = it->atom.pred;
          for (const auto& t : it->atom.args) a.args.push_back(rename(t, rm));
          child = goal_cons({it->negative, std::move(a)}, std::move(child));
        }
        stack.push_back({std::move(child), 0, mark});
        descended = true;
        break;
      }
      if (descended) continue;
      undo_to(f.undo_mark);
      stack.pop_back();
    }
    return true;
  }
};

}  // namespace

OracleOutcome bounded_interpret(const Program& p, const Query& goal,
                                std::size_t budget) {
  Atom a;
  a.pred = goal.pred;
  for (const auto& arg : goal.args) {
    if (arg.input_mode)
      throw OracleError("bounded_interpret needs a concrete goal");
    a.args.push_back(arg.term);
  }

  Interp interp(p, budget);
  interp.next_var = std::max<VarId>(p.max_var, goal.max_var) + 1;
  OracleOutcome out;
  out.halted = interp.search(goal_cons({false, std::move(a)}, nullptr),
                             /*first_only=*/false, &out.successes);
  out.steps = interp.steps;
  return out;
}

std::vector<TermPtr> herbrand_terms(const Program& p, unsigned depth) {
  if (p.constants.empty())
    throw OracleError(
        "the Herbrand universe is empty: add at least one constant to the "
        "program");
  if (depth < 1) depth = 1;

  std::vector<TermPtr> terms;
  std::vector<unsigned> depths;
  for (const auto& c : p.constants) {
    terms.push_back(Term::make_const(c));
    depths.push_back(1);
  }
  std::size_t prev_level_start = 0;
  for (unsigned d = 2; d <= depth; ++d) {
    std::size_t level_end = terms.size();
    for (const auto& fn : p.functions) {
      // argument tuples over terms of depth < d, at least one of depth d-1
      std::vector<std::size_t> ix(fn.arity, 0);
      bool finished = false;
      while (!finished) {
        bool fresh = false;
        for (std::size_t k = 0; k < fn.arity; ++k)
          if (ix[k] >= prev_level_start) fresh = true;
        if (fresh) {
          std::vector<TermPtr> args;
          args.reserve(fn.arity);
          for (std::size_t k = 0; k < fn.arity; ++k)
            args.push_back(terms[ix[k]]);
          terms.push_back(Term::make_func(fn.name, std::move(args)));
          depths.push_back(d);
        }
        // odometer over [0, level_end), rightmost fastest
        std::size_t k = fn.arity;
        while (true) {
          if (k == 0) {
            finished = true;
            break;
          }
          --k;
          if (++ix[k] < level_end) break;
          ix[k] = 0;
        }
      }
    }
    prev_level_start = level_end;
  }
  return terms;
}

std::vector<ForestSample> sample_forest(const Program& p, const Query& q,
                                        unsigned depth, std::size_t budget) {
  if (!q.moded()) throw OracleError("sample_forest needs a moded query");
  std::vector<TermPtr> universe = herbrand_terms(p, depth);

  std::vector<std::size_t> input_positions;
  for (std::size_t i = 0; i < q.args.size(); ++i)
    if (q.args[i].input_mode) input_positions.push_back(i);

  std::vector<ForestSample> out;
  std::vector<std::size_t> ix(input_positions.size(), 0);
  while (true) {
    Query inst = q;
    ForestSample sample;
    for (std::size_t k = 0; k < input_positions.size(); ++k) {
      inst.args[input_positions[k]] = {false, universe[ix[k]]};
      sample.instance.push_back(universe[ix[k]]);
    }
    sample.outcome = bounded_interpret(p, inst, budget);
    out.push_back(std::move(sample));

    std::size_t k = input_positions.size();
    bool done = true;
    while (k > 0) {
      --k;
      if (++ix[k] < universe.size()) {
        done = false;
        break;
      }
      ix[k] = 0;
    }
    if (done) break;
  }
  return out;
}

}  // namespace termpred
