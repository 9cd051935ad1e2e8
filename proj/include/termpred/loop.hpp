#pragma once

#include <optional>
#include <unordered_map>

#include "termpred/symbols.hpp"
#include "termpred/tree.hpp"

namespace termpred {

// a1 loops into a2: same predicate and the symbol string of a1 is a
// projection of the symbol string of a2.
bool loops_into(const Atom& a1, const Atom& a2);

// The goal at j is a loop goal of the goal at i: the selected subgoal of i
// is an ancestor of the selected subgoal of j, and loops into it.
bool is_loop_goal(const GeneralizedTree& t, NodeId i, NodeId j);

// Positions g_1 < ... < g_r on one derivation, each expanded by the same
// clause, each next goal a loop goal of the previous one.
struct LpWitness {
  std::vector<NodeId> positions;
  std::string clause;
};

// Memoizes per-node symbol strings of selected subgoals.
struct SymbolCache {
  std::unordered_map<NodeId, SymbolString> strings;

  const SymbolString& get(const GeneralizedTree& t, NodeId n);
};

// Looks for a repetition chain ending at `node`, which is about to be
// expanded with `about_clause`: r-1 earlier nodes on the derivation where
// that clause was applied, forming consecutive loop goals with `node` last.
// Returns the witness with the earliest feasible g_1.
std::optional<LpWitness> find_lp_prefix(const GeneralizedTree& t, NodeId node,
                                        const std::string& about_clause,
                                        unsigned r,
                                        SymbolCache* cache = nullptr);

// Between every consecutive pair of witness nodes some step must bind an
// input variable to a function containing a variable of the next selected
// subgoal.
bool has_term_size_decrease(const GeneralizedTree& t, const LpWitness& w);

}  // namespace termpred
