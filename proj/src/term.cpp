#include "termpred/term.hpp"

#include <algorithm>
#include <sstream>

namespace termpred {

TermPtr Term::make_var(VarId id, std::string name) {
  auto t = std::make_shared<Term>();
  t->tag = Tag::Var;
  t->var = id;
  t->name = std::move(name);
  return t;
}

TermPtr Term::make_const(std::string name) {
  auto t = std::make_shared<Term>();
  t->tag = Tag::Const;
  t->name = std::move(name);
  return t;
}

TermPtr Term::make_func(std::string name, std::vector<TermPtr> args) {
  auto t = std::make_shared<Term>();
  t->tag = args.empty() ? Tag::Const : Tag::Func;
  t->name = std::move(name);
  t->args = std::move(args);
  return t;
}

VarKinds VarKinds::none() {
  static const auto empty = std::make_shared<const std::set<VarId>>();
  return VarKinds{empty};
}

bool VarKinds::is_input(VarId v) const { return input && input->count(v) > 0; }

VarKinds VarKinds::with_input(const std::vector<VarId>& added) const {
  if (added.empty()) return *this;
  bool all_present = true;
  for (VarId v : added) {
    if (!is_input(v)) {
      all_present = false;
      break;
    }
  }
  if (all_present) return *this;
  auto next = std::make_shared<std::set<VarId>>(*input);
  next->insert(added.begin(), added.end());
  return VarKinds{std::move(next)};
}

std::size_t VarKinds::input_count() const { return input ? input->size() : 0; }

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->tag != b->tag) return false;
  switch (a->tag) {
    case Term::Tag::Var:
      return a->var == b->var;
    case Term::Tag::Const:
      return a->name == b->name;
    case Term::Tag::Func:
      if (a->name != b->name || a->args.size() != b->args.size()) return false;
      for (std::size_t i = 0; i < a->args.size(); ++i)
        if (!term_equal(a->args[i], b->args[i])) return false;
      return true;
  }
  return false;
}

bool atom_equal(const Atom& a, const Atom& b) {
  if (a.pred != b.pred || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!term_equal(a.args[i], b.args[i])) return false;
  return true;
}

std::size_t term_size(const TermPtr& t) {
  switch (t->tag) {
    case Term::Tag::Var:
    case Term::Tag::Const:
      return 1;
    case Term::Tag::Func: {
      std::size_t n = 1;
      for (const auto& a : t->args) n += term_size(a);
      return n;
    }
  }
  return 0;
}

std::size_t term_size(const Atom& a) {
  std::size_t n = 0;
  for (const auto& t : a.args) n += term_size(t);
  return n;
}

void collect_vars(const TermPtr& t, std::vector<VarId>& out) {
  switch (t->tag) {
    case Term::Tag::Var:
      out.push_back(t->var);
      break;
    case Term::Tag::Const:
      break;
    case Term::Tag::Func:
      for (const auto& a : t->args) collect_vars(a, out);
      break;
  }
}

std::vector<VarId> vars_of(const Atom& a) {
  std::vector<VarId> out;
  for (const auto& t : a.args) collect_vars(t, out);
  return out;
}

bool is_ground(const TermPtr& t) {
  switch (t->tag) {
    case Term::Tag::Var:
      return false;
    case Term::Tag::Const:
      return true;
    case Term::Tag::Func:
      return std::all_of(t->args.begin(), t->args.end(),
                         [](const TermPtr& a) { return is_ground(a); });
  }
  return true;
}

bool is_ground(const Atom& a) {
  return std::all_of(a.args.begin(), a.args.end(),
                     [](const TermPtr& t) { return is_ground(t); });
}

bool occurs_in(VarId v, const TermPtr& t) {
  switch (t->tag) {
    case Term::Tag::Var:
      return t->var == v;
    case Term::Tag::Const:
      return false;
    case Term::Tag::Func:
      return std::any_of(t->args.begin(), t->args.end(),
                         [v](const TermPtr& a) { return occurs_in(v, a); });
  }
  return false;
}

namespace {

bool is_cons(const Term& t) {
  return t.tag == Term::Tag::Func && t.name == kConsFunctor &&
         t.args.size() == 2;
}

void print_term(std::ostream& os, const TermPtr& t);

void print_list(std::ostream& os, const TermPtr& cell) {
  os << '[';
  TermPtr cur = cell;
  bool first = true;
  while (true) {
    if (!first) os << ',';
    print_term(os, cur->args[0]);
    first = false;
    TermPtr tail = cur->args[1];
    if (tail->tag == Term::Tag::Const && tail->name == kNilConstant) break;
    if (!is_cons(*tail)) {
      os << '|';
      print_term(os, tail);
      break;
    }
    cur = tail;
  }
  os << ']';
}

void print_term(std::ostream& os, const TermPtr& t) {
  switch (t->tag) {
    case Term::Tag::Var:
    case Term::Tag::Const:
      os << t->name;
      break;
    case Term::Tag::Func:
      if (is_cons(*t)) {
        print_list(os, t);
        return;
      }
      os << t->name << '(';
      for (std::size_t i = 0; i < t->args.size(); ++i) {
        if (i) os << ',';
        print_term(os, t->args[i]);
      }
      os << ')';
      break;
  }
}

}  // namespace

std::string to_string(const TermPtr& t) {
  std::ostringstream os;
  print_term(os, t);
  return os.str();
}

std::string to_string(const Atom& a) {
  std::ostringstream os;
  os << a.pred;
  if (!a.args.empty()) {
    os << '(';
    for (std::size_t i = 0; i < a.args.size(); ++i) {
      if (i) os << ',';
      print_term(os, a.args[i]);
    }
    os << ')';
  }
  return os.str();
}

}  // namespace termpred
