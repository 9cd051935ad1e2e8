#pragma once

#include <iosfwd>

#include "termpred/tree.hpp"

#include <json.hpp>

namespace termpred {

// Graphviz rendering: clause edges labelled with clause and mgu, negation
// arcs dashed, cut/prune markers on nodes.
void write_dot(const GeneralizedTree& t, std::ostream& os);

nlohmann::json tree_to_json(const GeneralizedTree& t);

}  // namespace termpred
