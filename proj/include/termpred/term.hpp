#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace termpred {

using VarId = std::uint32_t;

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// Symbolic term: a variable, a constant, or a function with arity >= 1.
// Terms are immutable and shared; substitution builds new terms.
struct Term {
  enum class Tag { Var, Const, Func };

  Tag tag;
  std::string name;  // variable display name, constant symbol, or function symbol
  VarId var = 0;     // Tag::Var only
  std::vector<TermPtr> args;  // Tag::Func only, non-empty

  static TermPtr make_var(VarId id, std::string name);
  static TermPtr make_const(std::string name);
  static TermPtr make_func(std::string name, std::vector<TermPtr> args);
};

struct Atom {
  std::string pred;
  std::vector<TermPtr> args;

  std::size_t arity() const { return args.size(); }
};

// Variable kinds are derivation-local: the same variable object can be
// ordinary on one branch and input on another, so kind lives outside Term
// in an immutable shared set that each tree node snapshots.
struct VarKinds {
  std::shared_ptr<const std::set<VarId>> input;

  static VarKinds none();
  bool is_input(VarId v) const;
  VarKinds with_input(const std::vector<VarId>& added) const;
  std::size_t input_count() const;
};

enum class VarKind { Ordinary, Input };

bool term_equal(const TermPtr& a, const TermPtr& b);
bool atom_equal(const Atom& a, const Atom& b);

// |t|: occurrences of function symbols, variables and constants.  For an
// atom the predicate symbol is not counted.
std::size_t term_size(const TermPtr& t);
std::size_t term_size(const Atom& a);

void collect_vars(const TermPtr& t, std::vector<VarId>& out);
std::vector<VarId> vars_of(const Atom& a);
bool is_ground(const TermPtr& t);
bool is_ground(const Atom& a);
bool occurs_in(VarId v, const TermPtr& t);

// Rendering uses list sugar for './2' and '[]'.
std::string to_string(const TermPtr& t);
std::string to_string(const Atom& a);

inline const std::string kConsFunctor = ".";
inline const std::string kNilConstant = "[]";

}  // namespace termpred
