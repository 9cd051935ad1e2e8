#include "termpred/subst.hpp"

#include <sstream>

namespace termpred {

TermPtr Substitution::lookup(VarId v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return nullptr;
  return bindings_[it->second].value;
}

void Substitution::add(Binding b) {
  index_[b.var] = bindings_.size();
  bindings_.push_back(std::move(b));
}

TermPtr apply(const Substitution& s, const TermPtr& t) {
  if (s.empty()) return t;
  switch (t->tag) {
    case Term::Tag::Var: {
      TermPtr v = s.lookup(t->var);
      return v ? v : t;
    }
    case Term::Tag::Const:
      return t;
    case Term::Tag::Func: {
      std::vector<TermPtr> args;
      args.reserve(t->args.size());
      bool changed = false;
      for (const auto& a : t->args) {
        TermPtr na = apply(s, a);
        changed = changed || na.get() != a.get();
        args.push_back(std::move(na));
      }
      if (!changed) return t;
      return Term::make_func(t->name, std::move(args));
    }
  }
  return t;
}

Atom apply(const Substitution& s, const Atom& a) {
  if (s.empty()) return a;
  Atom out;
  out.pred = a.pred;
  out.args.reserve(a.args.size());
  for (const auto& t : a.args) out.args.push_back(apply(s, t));
  return out;
}

VarKinds propagate_input_kind(const Substitution& s, VarKinds kinds) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& b : s.bindings()) {
      if (!kinds.is_input(b.var)) continue;
      std::vector<VarId> inside;
      collect_vars(b.value, inside);
      for (VarId v : inside) {
        if (!kinds.is_input(v)) {
          kinds = kinds.with_input({v});
          changed = true;
        }
      }
    }
  }
  return kinds;
}

std::string to_string(const Substitution& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& b : s.bindings()) {
    if (!first) os << ", ";
    first = false;
    os << b.var_name << '/' << to_string(b.value);
  }
  os << '}';
  return os.str();
}

}  // namespace termpred
