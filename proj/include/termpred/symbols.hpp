#pragma once

#include <string>
#include <vector>

#include "termpred/term.hpp"

namespace termpred {

// Left-to-right sequence of the symbols of a term or atom, with every
// variable occurrence collapsed to one reserved placeholder token.  The
// placeholder is not a legal identifier, so it cannot collide with program
// symbols.
using SymbolString = std::vector<std::string>;

inline const std::string kVarToken = "?";

SymbolString symbol_string(const TermPtr& t);
SymbolString symbol_string(const Atom& a);  // predicate symbol included

// s1 is obtained from s2 by deleting zero or more elements.
bool is_projection(const SymbolString& s1, const SymbolString& s2);

std::string to_string(const SymbolString& s);

}  // namespace termpred
