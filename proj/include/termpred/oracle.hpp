#pragma once

#include <stdexcept>

#include "termpred/engine.hpp"
#include "termpred/program.hpp"

namespace termpred {

struct OracleOutcome {
  bool halted = false;        // search space exhausted within budget
  std::size_t successes = 0;  // success leaves seen (possibly partial)
  std::size_t steps = 0;      // derivation steps consumed
};

struct OracleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Plain depth-first SLDNF evaluation, no loop checks: subsidiary proofs for
// ground negative subgoals stop at the first success.  The budget counts
// derivation steps.  Deliberately a separate implementation from the tree
// engine so the two can cross-check each other.
OracleOutcome bounded_interpret(const Program& p, const Query& goal,
                                std::size_t budget);

// Ground terms over the program's constants and function symbols with
// nesting depth at most `depth` (a constant has depth 1; values below 1 are
// treated as 1), in a deterministic order.  Throws OracleError when the
// program has no constants.
std::vector<TermPtr> herbrand_terms(const Program& p, unsigned depth);

struct ForestSample {
  std::vector<TermPtr> instance;  // ground terms chosen per input mode
  OracleOutcome outcome;
};

// Grounds every input mode of a moded query over the Herbrand terms up to
// `depth` (cartesian product, rightmost position varies fastest) and runs
// bounded_interpret on each instance.
std::vector<ForestSample> sample_forest(const Program& p, const Query& q,
                                        unsigned depth, std::size_t budget);

}  // namespace termpred
