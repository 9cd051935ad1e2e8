#include "termpred/symbols.hpp"

#include <sstream>

namespace termpred {

namespace {

void append_symbols(const TermPtr& t, SymbolString& out) {
  switch (t->tag) {
    case Term::Tag::Var:
      out.push_back(kVarToken);
      break;
    case Term::Tag::Const:
      out.push_back(t->name);
      break;
    case Term::Tag::Func:
      out.push_back(t->name);
      for (const auto& a : t->args) append_symbols(a, out);
      break;
  }
}

}  // namespace

SymbolString symbol_string(const TermPtr& t) {
  SymbolString out;
  append_symbols(t, out);
  return out;
}

SymbolString symbol_string(const Atom& a) {
  SymbolString out;
  out.push_back(a.pred);
  for (const auto& t : a.args) append_symbols(t, out);
  return out;
}

bool is_projection(const SymbolString& s1, const SymbolString& s2) {
  std::size_t i = 0;
  for (std::size_t j = 0; i < s1.size() && j < s2.size(); ++j)
    if (s1[i] == s2[j]) ++i;
  return i == s1.size();
}

std::string to_string(const SymbolString& s) {
  std::ostringstream os;
  for (const auto& sym : s) os << sym;
  return os.str();
}

}  // namespace termpred
