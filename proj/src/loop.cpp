#include "termpred/loop.hpp"

#include <algorithm>
#include <set>

namespace termpred {

bool loops_into(const Atom& a1, const Atom& a2) {
  if (a1.pred != a2.pred || a1.arity() != a2.arity()) return false;
  return is_projection(symbol_string(a1), symbol_string(a2));
}

bool is_loop_goal(const GeneralizedTree& t, NodeId i, NodeId j) {
  if (i == j) return false;
  const Node& ni = t.at(i);
  const Node& nj = t.at(j);
  if (ni.goal.empty() || nj.goal.empty()) return false;
  if (!anc_contains(nj.goal[0].ancestors, i)) return false;
  return loops_into(ni.goal[0].atom, nj.goal[0].atom);
}

const SymbolString& SymbolCache::get(const GeneralizedTree& t, NodeId n) {
  auto it = strings.find(n);
  if (it != strings.end()) return it->second;
  return strings.emplace(n, symbol_string(t.at(n).goal[0].atom))
      .first->second;
}

namespace {

bool chain_loops(const GeneralizedTree& t, SymbolCache& cache, NodeId a,
                 NodeId b) {
  const Atom& aa = t.at(a).goal[0].atom;
  const Atom& ab = t.at(b).goal[0].atom;
  if (aa.pred != ab.pred || aa.arity() != ab.arity()) return false;
  return is_projection(cache.get(t, a), cache.get(t, b));
}

}  // namespace

std::optional<LpWitness> find_lp_prefix(const GeneralizedTree& t, NodeId node,
                                        const std::string& about_clause,
                                        unsigned r, SymbolCache* cache) {
  if (r < 2) return std::nullopt;
  SymbolCache local;
  SymbolCache& sc = cache ? *cache : local;

  const Node& n = t.at(node);
  if (n.goal.empty() || n.goal[0].negative) return std::nullopt;

  // Edge label applied at each node along the current derivation: the edge
  // of its child on the path.
  std::unordered_map<NodeId, const std::string*> applied;
  for (NodeId cur = node; t.at(cur).parent != kNoNode;
       cur = t.at(cur).parent) {
    const Node& c = t.at(cur);
    if (c.edge == EdgeKind::Clause) applied[c.parent] = &c.clause;
  }

  // Candidates: ancestor chain of the selected subgoal, restricted to nodes
  // the same clause was applied at.  The chain is already ordered newest
  // first and pairwise ancestor-related.
  std::vector<NodeId> cand;
  for (const AncestorLink* p = n.goal[0].ancestors.get(); p;
       p = p->next.get()) {
    auto it = applied.find(p->node);
    if (it != applied.end() && *it->second == about_clause)
      cand.push_back(p->node);
  }
  std::reverse(cand.begin(), cand.end());  // oldest first
  if (cand.size() + 1 < r) return std::nullopt;

  // longest[k]: length of the longest consecutive loop-goal chain starting
  // at cand[k], running through later candidates, ending at `node`.
  std::size_t m = cand.size();
  std::vector<unsigned> longest(m, 0);
  for (std::size_t k = m; k-- > 0;) {
    if (chain_loops(t, sc, cand[k], node)) longest[k] = 2;
    for (std::size_t j = k + 1; j < m; ++j) {
      if (longest[j] == 0) continue;
      if (chain_loops(t, sc, cand[k], cand[j]))
        longest[k] = std::max(longest[k], longest[j] + 1);
    }
  }

  // earliest feasible g_1, then greedy earliest continuation
  std::size_t g1 = m;
  for (std::size_t k = 0; k < m; ++k) {
    if (longest[k] >= r) {
      g1 = k;
      break;
    }
  }
  if (g1 == m) return std::nullopt;

  LpWitness w;
  w.clause = about_clause;
  w.positions.push_back(cand[g1]);
  std::size_t prev = g1;
  for (unsigned need = r - 1; need >= 2; --need) {
    for (std::size_t j = prev + 1; j < m; ++j) {
      if (longest[j] >= need && chain_loops(t, sc, cand[prev], cand[j])) {
        w.positions.push_back(cand[j]);
        prev = j;
        break;
      }
    }
  }
  w.positions.push_back(node);
  return w;
}

bool has_term_size_decrease(const GeneralizedTree& t, const LpWitness& w) {
  if (w.positions.size() < 2) return false;
  for (std::size_t i = 0; i + 1 < w.positions.size(); ++i) {
    NodeId from = w.positions[i];
    NodeId to = w.positions[i + 1];
    std::vector<VarId> sel_vars = vars_of(t.at(to).goal[0].atom);
    std::set<VarId> sel(sel_vars.begin(), sel_vars.end());
    bool found = false;
    for (NodeId cur = to; cur != from && !found; cur = t.at(cur).parent) {
      for (const Binding& b : t.at(cur).mgu.bindings()) {
        if (b.kind_at_bind != VarKind::Input) continue;
        if (b.value->tag != Term::Tag::Func) continue;
        std::vector<VarId> inside;
        collect_vars(b.value, inside);
        if (std::any_of(inside.begin(), inside.end(),
                        [&](VarId v) { return sel.count(v) > 0; })) {
          found = true;
          break;
        }
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace termpred
