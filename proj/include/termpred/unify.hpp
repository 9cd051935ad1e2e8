#pragma once

#include <limits>

#include "termpred/subst.hpp"
#include "termpred/symbols.hpp"
#include "termpred/term.hpp"

namespace termpred {

enum class UnifyFail { Clash, OccursCheck };

struct UnifyOutcome {
  bool ok = false;
  UnifyFail fail = UnifyFail::Clash;
  Substitution mgu;  // composed, idempotent
  VarKinds kinds;    // kinds after input propagation
};

inline constexpr VarId kNoClauseBase = std::numeric_limits<VarId>::max();

// Unifies two atoms under the derivation-step conventions:
//   - variable/variable ties bind the clause variable (id >= clause_base) to
//     the goal variable; within one side the later-created variable binds to
//     the earlier one;
//   - an input variable is never bound to an ordinary variable: the ordinary
//     side is bound to the input side regardless of goal/clause position;
//   - binding an input variable to a function marks every variable inside
//     the bound term as input.
UnifyOutcome unify(const Atom& goal, const Atom& head, const VarKinds& kinds,
                   VarId clause_base = kNoClauseBase, bool occurs_check = true);

enum class VariantMode { Exact, SymbolStr };

// Exact mode checks for a variable-renaming bijection; SymbolStr uses the
// cheaper symbol-string comparison.
bool is_variant(const Atom& a, const Atom& b, VariantMode mode);

}  // namespace termpred
