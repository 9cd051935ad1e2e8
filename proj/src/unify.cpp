#include "termpred/unify.hpp"

#include <map>
#include <set>
#include <unordered_map>

namespace termpred {

namespace {

// Triangular working state; bindings are composed into an idempotent
// substitution once unification succeeds.
struct Work {
  std::unordered_map<VarId, TermPtr> bound;
  struct Rec {
    VarId var;
    std::string name;
    VarKind kind;
    TermPtr raw;
  };
  std::vector<Rec> order;
  std::set<VarId> input;
  bool occurs_check = true;

  TermPtr walk(TermPtr t) const {
    while (t->tag == Term::Tag::Var) {
      auto it = bound.find(t->var);
      if (it == bound.end()) break;
      t = it->second;
    }
    return t;
  }

  TermPtr resolve(const TermPtr& t, std::set<VarId>& busy) const {
    TermPtr w = t;
    if (w->tag == Term::Tag::Var) {
      auto it = bound.find(w->var);
      if (it != bound.end()) {
        if (busy.count(w->var)) return w;  // cycle guard (occurs check off)
        busy.insert(w->var);
        TermPtr r = resolve(it->second, busy);
        busy.erase(w->var);
        return r;
      }
      return w;
    }
    if (w->tag == Term::Tag::Const) return w;
    std::vector<TermPtr> args;
    args.reserve(w->args.size());
    bool changed = false;
    for (const auto& a : w->args) {
      TermPtr na = resolve(a, busy);
      changed = changed || na.get() != a.get();
      args.push_back(std::move(na));
    }
    if (!changed) return w;
    return Term::make_func(w->name, std::move(args));
  }

  TermPtr resolve(const TermPtr& t) const {
    std::set<VarId> busy;
    return resolve(t, busy);
  }

  bool occurs(VarId v, const TermPtr& t) const {
    TermPtr w = walk(t);
    switch (w->tag) {
      case Term::Tag::Var:
        return w->var == v;
      case Term::Tag::Const:
        return false;
      case Term::Tag::Func:
        for (const auto& a : w->args)
          if (occurs(v, a)) return true;
        return false;
    }
    return false;
  }

  void bind(const TermPtr& var, const TermPtr& value) {
    VarKind k = input.count(var->var) ? VarKind::Input : VarKind::Ordinary;
    order.push_back({var->var, var->name, k, value});
    bound[var->var] = value;
    if (k == VarKind::Input && value->tag != Term::Tag::Var) {
      std::vector<VarId> inside;
      collect_vars(resolve(value), inside);
      input.insert(inside.begin(), inside.end());
    }
  }
};

enum class Step { Ok, Clash, Occurs };

Step unify_terms(Work& w, const TermPtr& ta, const TermPtr& tb,
                 VarId clause_base) {
  TermPtr a = w.walk(ta);
  TermPtr b = w.walk(tb);

  if (a->tag == Term::Tag::Var && b->tag == Term::Tag::Var) {
    if (a->var == b->var) return Step::Ok;
    bool a_in = w.input.count(a->var) > 0;
    bool b_in = w.input.count(b->var) > 0;
    if (a_in != b_in) {
      // ordinary variable is bound to the input variable, never the reverse
      if (a_in)
        w.bind(b, a);
      else
        w.bind(a, b);
      return Step::Ok;
    }
    bool a_clause = a->var >= clause_base;
    bool b_clause = b->var >= clause_base;
    if (a_clause != b_clause) {
      // goal variable substitutes for the clause variable
      if (a_clause)
        w.bind(a, b);
      else
        w.bind(b, a);
      return Step::Ok;
    }
    // same side: later-created binds to earlier-created
    if (a->var > b->var)
      w.bind(a, b);
    else
      w.bind(b, a);
    return Step::Ok;
  }

  if (a->tag == Term::Tag::Var || b->tag == Term::Tag::Var) {
    const TermPtr& var = a->tag == Term::Tag::Var ? a : b;
    const TermPtr& val = a->tag == Term::Tag::Var ? b : a;
    if (w.occurs_check && w.occurs(var->var, val)) return Step::Occurs;
    w.bind(var, val);
    return Step::Ok;
  }

  if (a->tag == Term::Tag::Const && b->tag == Term::Tag::Const)
    return a->name == b->name ? Step::Ok : Step::Clash;

  if (a->tag == Term::Tag::Func && b->tag == Term::Tag::Func) {
    if (a->name != b->name || a->args.size() != b->args.size())
      return Step::Clash;
    for (std::size_t i = 0; i < a->args.size(); ++i) {
      Step s = unify_terms(w, a->args[i], b->args[i], clause_base);
      if (s != Step::Ok) return s;
    }
    return Step::Ok;
  }

  return Step::Clash;
}

}  // namespace

UnifyOutcome unify(const Atom& goal, const Atom& head, const VarKinds& kinds,
                   VarId clause_base, bool occurs_check) {
  UnifyOutcome out;
  if (goal.pred != head.pred || goal.arity() != head.arity()) {
    out.fail = UnifyFail::Clash;
    return out;
  }
  Work w;
  w.occurs_check = occurs_check;
  if (kinds.input) w.input = *kinds.input;

  for (std::size_t i = 0; i < goal.args.size(); ++i) {
    Step s = unify_terms(w, goal.args[i], head.args[i], clause_base);
    if (s == Step::Clash) {
      out.fail = UnifyFail::Clash;
      return out;
    }
    if (s == Step::Occurs) {
      out.fail = UnifyFail::OccursCheck;
      return out;
    }
  }

  out.ok = true;
  for (const auto& rec : w.order)
    out.mgu.add({rec.var, rec.name, rec.kind, w.resolve(rec.raw)});
  if (kinds.input && w.input == *kinds.input) {
    out.kinds = kinds;
  } else {
    std::vector<VarId> all(w.input.begin(), w.input.end());
    out.kinds = VarKinds::none().with_input(all);
  }
  return out;
}

namespace {

bool variant_walk(const TermPtr& a, const TermPtr& b,
                  std::map<VarId, VarId>& fwd, std::map<VarId, VarId>& rev) {
  if (a->tag != b->tag) return false;
  switch (a->tag) {
    case Term::Tag::Var: {
      auto f = fwd.find(a->var);
      auto r = rev.find(b->var);
      if (f == fwd.end() && r == rev.end()) {
        fwd[a->var] = b->var;
        rev[b->var] = a->var;
        return true;
      }
      return f != fwd.end() && r != rev.end() && f->second == b->var &&
             r->second == a->var;
    }
    case Term::Tag::Const:
      return a->name == b->name;
    case Term::Tag::Func:
      if (a->name != b->name || a->args.size() != b->args.size()) return false;
      for (std::size_t i = 0; i < a->args.size(); ++i)
        if (!variant_walk(a->args[i], b->args[i], fwd, rev)) return false;
      return true;
  }
  return false;
}

}  // namespace

bool is_variant(const Atom& a, const Atom& b, VariantMode mode) {
  if (mode == VariantMode::SymbolStr)
    return symbol_string(a) == symbol_string(b);
  if (a.pred != b.pred || a.arity() != b.arity()) return false;
  std::map<VarId, VarId> fwd, rev;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!variant_walk(a.args[i], b.args[i], fwd, rev)) return false;
  return true;
}

}  // namespace termpred
