#include "termpred/trace.hpp"

#include <ostream>

#include <json.hpp>

namespace termpred {

namespace {

const char* status_name(NodeStatus s) {
  switch (s) {
    case NodeStatus::Open:
      return "open";
    case NodeStatus::Success:
      return "success";
    case NodeStatus::Failure:
      return "failure";
    case NodeStatus::CutLeaf:
      return "cut";
    case NodeStatus::Unexpanded:
      return "unexpanded";
    case NodeStatus::Flounder:
      return "flounder";
  }
  return "?";
}

const char* edge_name(EdgeKind e) {
  switch (e) {
    case EdgeKind::Root:
      return "root";
    case EdgeKind::Clause:
      return "clause";
    case EdgeKind::NegationArc:
      return "negation-arc";
    case EdgeKind::NegationSuccess:
      return "negation-success";
  }
  return "?";
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

void write_dot(const GeneralizedTree& t, std::ostream& os) {
  os << "digraph sldnf {\n  node [shape=box, fontname=\"monospace\"];\n";
  for (const Node& n : t.nodes) {
    std::string label = "N" + std::to_string(n.id) + ": " + to_string(n.goal);
    for (const auto& sk : n.skipped) {
      label += "\\n";
      label += sk.why == SkipRecord::Why::LoopCheck ? "cut " : "prune ";
      label += sk.clause;
    }
    os << "  n" << n.id << " [label=\"" << dot_escape(label) << '"';
    if (n.status == NodeStatus::Success) os << ", color=darkgreen";
    if (n.status == NodeStatus::Failure) os << ", color=red";
    if (n.status == NodeStatus::CutLeaf) os << ", style=dashed";
    if (n.status == NodeStatus::Unexpanded) os << ", style=dotted";
    os << "];\n";
    if (n.parent == kNoNode) continue;
    os << "  n" << n.parent << " -> n" << n.id;
    switch (n.edge) {
      case EdgeKind::Clause: {
        std::string elabel = n.clause;
        std::string mgu = to_string(n.mgu);
        if (mgu != "{}") elabel += " " + mgu;
        os << " [label=\"" << dot_escape(elabel) << "\"]";
        break;
      }
      case EdgeKind::NegationArc:
        os << " [style=dashed, arrowhead=onormal]";
        break;
      case EdgeKind::NegationSuccess:
        os << " [label=\"naf\"]";
        break;
      default:
        break;
    }
    os << ";\n";
  }
  os << "}\n";
}

nlohmann::json tree_to_json(const GeneralizedTree& t) {
  nlohmann::json j;
  j["outcome"] = static_cast<int>(t.outcome);
  j["treeCount"] = t.tree_count;
  j["mainSuccessCount"] = t.main_success_count;
  j["nodes"] = nlohmann::json::array();
  for (const Node& n : t.nodes) {
    nlohmann::json nj;
    nj["id"] = n.id;
    nj["tree"] = n.tree;
    nj["parent"] = n.parent == kNoNode ? nlohmann::json(nullptr)
                                       : nlohmann::json(n.parent);
    nj["edge"] = edge_name(n.edge);
    if (n.edge == EdgeKind::Clause) {
      nj["clause"] = n.clause;
      nj["mgu"] = to_string(n.mgu);
    }
    nj["goal"] = to_string(n.goal);
    nj["status"] = status_name(n.status);
    nj["depth"] = n.depth;
    nj["children"] = n.children;
    nj["skipped"] = nlohmann::json::array();
    for (const auto& sk : n.skipped)
      nj["skipped"].push_back(
          {{"clause", sk.clause},
           {"why", sk.why == SkipRecord::Why::LoopCheck
                       ? "loop-check"
                       : (sk.why == SkipRecord::Why::Prune ? "prune"
                                                           : "observer")}});
    j["nodes"].push_back(std::move(nj));
  }
  return j;
}

}  // namespace termpred
