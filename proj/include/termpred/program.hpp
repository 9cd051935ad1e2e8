#pragma once

#include <map>
#include <string>
#include <vector>

#include "termpred/term.hpp"

namespace termpred {

struct BodyLiteral {
  bool negative = false;
  Atom atom;
};

struct Clause {
  std::string label;  // C_1, C_2, ... in source order
  Atom head;
  std::vector<BodyLiteral> body;
};

struct PredSig {
  std::string name;
  std::size_t arity;

  bool operator==(const PredSig&) const = default;
};

struct Program {
  std::vector<Clause> clauses;
  // name/arity -> clause indexes in source order
  std::map<std::string, std::vector<std::size_t>> predicate_table;
  std::vector<std::string> constants;  // first-occurrence order
  std::vector<PredSig> functions;      // symbol/arity, first-occurrence order
  std::vector<PredSig> predicates;     // first-occurrence order, heads first
  VarId max_var = 0;

  static std::string pred_key(const std::string& name, std::size_t arity);
  const std::vector<std::size_t>* clauses_for(const std::string& name,
                                              std::size_t arity) const;
  void index();  // rebuilds tables from clauses
};

struct QueryArg {
  bool input_mode = false;
  TermPtr term;  // null when input_mode
};

struct Query {
  std::string pred;
  std::vector<QueryArg> args;
  VarId max_var = 0;

  bool moded() const;
  std::string text() const;
};

// Fresh-variable source for one analysis session.
struct VarGen {
  VarId next = 1;

  VarId fresh() { return next++; }
};

// Returns the clause with every variable replaced by a fresh ordinary
// variable; display names are suffixed with the given tag.
Clause rename_apart(const Clause& c, VarGen& gen, const std::string& tag);

}  // namespace termpred
