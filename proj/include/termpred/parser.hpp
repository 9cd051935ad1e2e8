#pragma once

#include <stdexcept>
#include <string>

#include "termpred/program.hpp"

namespace termpred {

struct ParseError : std::runtime_error {
  int line;
  int column;

  ParseError(int l, int c, const std::string& msg)
      : std::runtime_error("parse error at " + std::to_string(l) + ":" +
                           std::to_string(c) + ": " + msg),
        line(l),
        column(c) {}
};

// Prolog subset: facts `p(t,...).`, rules `h :- b1, ..., bn.`, negation
// `\+ g`, list sugar, integers as constants, `%` line comments.
Program parse_program(const std::string& text);

// Query grammar: `p(i,o)` style modes (i = input mode, o = fresh variable)
// or full terms for concrete queries, e.g. `append([a],[b],Z)`.  A bare
// lowercase `i` argument is an input mode; nested input modes are rejected.
Query parse_query(const std::string& text);

// Canonical rendering; reparsing it yields a structurally identical program.
std::string to_string(const Program& p);
std::string to_string(const Clause& c);

}  // namespace termpred
