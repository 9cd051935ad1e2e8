#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "termpred/term.hpp"

namespace termpred {

// One binding of an idempotent substitution.  kind_at_bind is the bound
// variable's kind at the moment the binding was created; the term-size
// decrease test depends on it.
struct Binding {
  VarId var;
  std::string var_name;
  VarKind kind_at_bind;
  TermPtr value;
};

class Substitution {
 public:
  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }
  const std::vector<Binding>& bindings() const { return bindings_; }

  TermPtr lookup(VarId v) const;
  void add(Binding b);

 private:
  std::vector<Binding> bindings_;  // insertion order
  std::unordered_map<VarId, std::size_t> index_;
};

TermPtr apply(const Substitution& s, const TermPtr& t);
Atom apply(const Substitution& s, const Atom& a);

// Marks input, transitively, every variable occurring in a term bound to an
// input-kind variable.
VarKinds propagate_input_kind(const Substitution& s, VarKinds kinds);

std::string to_string(const Substitution& s);

}  // namespace termpred
