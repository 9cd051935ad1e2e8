#include "termpred/program.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace termpred {

std::string Program::pred_key(const std::string& name, std::size_t arity) {
  return name + "/" + std::to_string(arity);
}

const std::vector<std::size_t>* Program::clauses_for(const std::string& name,
                                                     std::size_t arity) const {
  auto it = predicate_table.find(pred_key(name, arity));
  if (it == predicate_table.end()) return nullptr;
  return &it->second;
}

namespace {

void scan_term(const TermPtr& t, Program& p) {
  switch (t->tag) {
    case Term::Tag::Var:
      p.max_var = std::max(p.max_var, t->var);
      break;
    case Term::Tag::Const:
      if (std::find(p.constants.begin(), p.constants.end(), t->name) ==
          p.constants.end())
        p.constants.push_back(t->name);
      break;
    case Term::Tag::Func: {
      PredSig sig{t->name, t->args.size()};
      if (std::find(p.functions.begin(), p.functions.end(), sig) ==
          p.functions.end())
        p.functions.push_back(sig);
      for (const auto& a : t->args) scan_term(a, p);
      break;
    }
  }
}

void scan_atom(const Atom& a, Program& p) {
  PredSig sig{a.pred, a.arity()};
  if (std::find(p.predicates.begin(), p.predicates.end(), sig) ==
      p.predicates.end())
    p.predicates.push_back(sig);
  for (const auto& t : a.args) scan_term(t, p);
}

}  // namespace

void Program::index() {
  predicate_table.clear();
  constants.clear();
  functions.clear();
  predicates.clear();
  max_var = 0;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    const Clause& c = clauses[i];
    predicate_table[pred_key(c.head.pred, c.head.arity())].push_back(i);
    scan_atom(c.head, *this);
  }
  // body predicates register after all heads
  for (const auto& c : clauses)
    for (const auto& lit : c.body) scan_atom(lit.atom, *this);
}

bool Query::moded() const {
  return std::any_of(args.begin(), args.end(),
                     [](const QueryArg& a) { return a.input_mode; });
}

std::string Query::text() const {
  std::ostringstream os;
  os << pred;
  if (!args.empty()) {
    os << '(';
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) os << ',';
      os << (args[i].input_mode ? "i" : to_string(args[i].term));
    }
    os << ')';
  }
  return os.str();
}

namespace {

TermPtr rename_term(const TermPtr& t,
                    std::unordered_map<VarId, TermPtr>& map, VarGen& gen,
                    const std::string& tag) {
  switch (t->tag) {
    case Term::Tag::Var: {
      auto it = map.find(t->var);
      if (it != map.end()) return it->second;
      TermPtr fresh = Term::make_var(gen.fresh(), t->name + "_" + tag);
      map.emplace(t->var, fresh);
      return fresh;
    }
    case Term::Tag::Const:
      return t;
    case Term::Tag::Func: {
      std::vector<TermPtr> args;
      args.reserve(t->args.size());
      for (const auto& a : t->args)
        args.push_back(rename_term(a, map, gen, tag));
      return Term::make_func(t->name, std::move(args));
    }
  }
  return t;
}

Atom rename_atom(const Atom& a, std::unordered_map<VarId, TermPtr>& map,
                 VarGen& gen, const std::string& tag) {
  Atom out;
  out.pred = a.pred;
  out.args.reserve(a.args.size());
  for (const auto& t : a.args) out.args.push_back(rename_term(t, map, gen, tag));
  return out;
}

}  // namespace

Clause rename_apart(const Clause& c, VarGen& gen, const std::string& tag) {
  std::unordered_map<VarId, TermPtr> map;
  Clause out;
  out.label = c.label;
  out.head = rename_atom(c.head, map, gen, tag);
  out.body.reserve(c.body.size());
  for (const auto& lit : c.body)
    out.body.push_back({lit.negative, rename_atom(lit.atom, map, gen, tag)});
  return out;
}

}  // namespace termpred
