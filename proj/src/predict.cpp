#include "termpred/predict.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include <json.hpp>

namespace termpred {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Terminating:
      return "terminating";
    case Verdict::PredictedTerminating:
      return "predicted-terminating";
    case Verdict::PredictedNonTerminating:
      return "predicted-non-terminating";
    case Verdict::ResourceExceeded:
      return "resource-exceeded";
  }
  return "?";
}

const char* pruning_name(Pruning p) {
  switch (p) {
    case Pruning::None:
      return "none";
    case Pruning::Variants:
      return "variants";
    case Pruning::LoopGoals:
      return "loop-goals";
  }
  return "?";
}

std::optional<Pruning> pruning_from_name(const std::string& name) {
  if (name == "none") return Pruning::None;
  if (name == "variants") return Pruning::Variants;
  if (name == "loop-goals") return Pruning::LoopGoals;
  return std::nullopt;
}

namespace {

// Later loop-goal node below `node` that already applied `clause`; the
// variant requirement is dropped under Pruning::LoopGoals.
NodeId prune_match(const GeneralizedTree& t, SymbolCache& cache, NodeId node,
                   const std::string& clause, Pruning mode) {
  const Node& n = t.at(node);
  if (n.goal.empty() || n.goal[0].negative) return kNoNode;
  const Atom& sel = n.goal[0].atom;

  std::vector<NodeId> work(n.children.begin(), n.children.end());
  while (!work.empty()) {
    NodeId mid = work.back();
    work.pop_back();
    const Node& m = t.at(mid);
    work.insert(work.end(), m.children.begin(), m.children.end());
    if (m.goal.empty() || m.goal[0].negative) continue;
    const Atom& msel = m.goal[0].atom;
    if (msel.pred != sel.pred || msel.arity() != sel.arity()) continue;
    if (!anc_contains(m.goal[0].ancestors, node)) continue;
    const SymbolString& sn = cache.get(t, node);
    const SymbolString& sm = cache.get(t, mid);
    bool related = mode == Pruning::Variants ? sn == sm
                                             : is_projection(sn, sm);
    if (!related) continue;
    for (NodeId cid : m.children) {
      const Node& ch = t.at(cid);
      if (ch.edge == EdgeKind::Clause && ch.clause == clause) return mid;
    }
  }
  return kNoNode;
}

class PredictorController : public StepController {
 public:
  PredictorController(unsigned r, Pruning pruning) : r_(r), pruning_(pruning) {}

  ClauseDecision before_clause(const GeneralizedTree& t, NodeId at,
                               const Clause& c) override {
    if (auto w = find_lp_prefix(t, at, c.label, r_, &cache_)) {
      if (!has_term_size_decrease(t, *w)) {
        fatal_ = std::move(*w);
        return ClauseDecision::halt(verdict_name(
            Verdict::PredictedNonTerminating));
      }
      cuts_.push_back({at, c.label, w->positions});
      return ClauseDecision::skip(SkipRecord::Why::LoopCheck);
    }
    if (pruning_ != Pruning::None) {
      NodeId m = prune_match(t, cache_, at, c.label, pruning_);
      if (m != kNoNode) {
        prunes_.push_back({at, c.label, m});
        return ClauseDecision::skip(SkipRecord::Why::Prune);
      }
    }
    return ClauseDecision::apply();
  }

  const std::vector<CutEvent>& cuts() const { return cuts_; }
  const std::vector<PruneEvent>& prunes() const { return prunes_; }
  const std::optional<LpWitness>& fatal() const { return fatal_; }

  std::vector<CutEvent> take_cuts() { return std::move(cuts_); }
  std::vector<PruneEvent> take_prunes() { return std::move(prunes_); }

 private:
  unsigned r_;
  Pruning pruning_;
  SymbolCache cache_;
  std::vector<CutEvent> cuts_;
  std::vector<PruneEvent> prunes_;
  std::optional<LpWitness> fatal_;
};

WitnessReport render_witness(const GeneralizedTree& t, const LpWitness& w) {
  WitnessReport out;
  out.positions = w.positions;
  out.clause = w.clause;
  std::vector<NodeId> path = t.derivation_to(w.positions.back());
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Node& n = t.at(path[i]);
    WitnessStep step;
    step.node = n.id;
    step.goal = to_string(n.goal);
    if (i + 1 < path.size()) {
      const Node& next = t.at(path[i + 1]);
      switch (next.edge) {
        case EdgeKind::Clause:
          step.clause = next.clause;
          step.mgu = to_string(next.mgu);
          break;
        case EdgeKind::NegationArc:
          step.clause = "naf";
          break;
        case EdgeKind::NegationSuccess:
          step.clause = "naf-success";
          break;
        default:
          break;
      }
    } else {
      step.clause = w.clause;  // the looping clause about to be applied
    }
    out.derivation.push_back(std::move(step));
  }
  return out;
}

}  // namespace

Report predict(const Program& p, const Query& q, const PredictorConfig& cfg) {
  if (cfg.r < 2)
    throw std::invalid_argument("repetition number must be at least 2");
  auto started = std::chrono::steady_clock::now();
  PredictorController ctl(cfg.r, cfg.pruning);
  TreeBuilder builder(p, cfg.limits, &ctl);
  builder.make_root(q);
  builder.run();
  auto tree = std::make_shared<GeneralizedTree>(builder.take());
  if (tree->outcome == BuildOutcome::Floundered) {
    const Node& n = tree->at(tree->flounder_node);
    throw FlounderError(n.id, to_string(n.goal[0].atom));
  }

  Report rep;
  rep.r = cfg.r;
  rep.pruning = cfg.pruning;
  rep.query = q.text();
  rep.node_count = tree->nodes.size();
  rep.cuts = ctl.take_cuts();
  rep.prunes = ctl.take_prunes();
  if (tree->outcome == BuildOutcome::ResourceExceeded) {
    rep.verdict = Verdict::ResourceExceeded;
  } else if (tree->outcome == BuildOutcome::Halted) {
    rep.verdict = Verdict::PredictedNonTerminating;
    rep.witness = render_witness(*tree, *ctl.fatal());
  } else {
    rep.verdict = rep.cuts.empty() ? Verdict::Terminating
                                   : Verdict::PredictedTerminating;
  }
  rep.tree = std::move(tree);
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - started)
                       .count();
  return rep;
}

std::vector<std::string> prune_filter(const GeneralizedTree& t, NodeId node,
                                      Pruning mode) {
  std::vector<std::string> out;
  if (mode == Pruning::None) return out;
  const Node& n = t.at(node);
  if (n.goal.empty() || n.goal[0].negative) return out;
  SymbolCache cache;
  std::vector<NodeId> work(n.children.begin(), n.children.end());
  while (!work.empty()) {
    NodeId mid = work.back();
    work.pop_back();
    const Node& m = t.at(mid);
    work.insert(work.end(), m.children.begin(), m.children.end());
    if (m.goal.empty() || m.goal[0].negative) continue;
    if (m.goal[0].atom.pred != n.goal[0].atom.pred ||
        m.goal[0].atom.arity() != n.goal[0].atom.arity())
      continue;
    if (!anc_contains(m.goal[0].ancestors, node)) continue;
    const SymbolString& sn = cache.get(t, node);
    const SymbolString& sm = cache.get(t, mid);
    bool related =
        mode == Pruning::Variants ? sn == sm : is_projection(sn, sm);
    if (!related) continue;
    for (NodeId cid : m.children) {
      const Node& ch = t.at(cid);
      if (ch.edge == EdgeKind::Clause &&
          std::find(out.begin(), out.end(), ch.clause) == out.end())
        out.push_back(ch.clause);
    }
  }
  return out;
}

std::vector<Query> most_general_moded_queries(const Program& p) {
  std::vector<Query> out;
  for (const PredSig& pred : p.predicates) {
    if (pred.arity == 0) continue;
    for (std::uint64_t mask = 1; mask < (1ull << pred.arity); ++mask) {
      Query q;
      q.pred = pred.name;
      VarGen gen;
      for (std::size_t j = 0; j < pred.arity; ++j) {
        if (mask & (1ull << j)) {
          q.args.push_back({true, nullptr});
        } else {
          q.args.push_back({false, Term::make_var(
                                       gen.fresh(),
                                       "V" + std::to_string(j + 1))});
        }
      }
      q.max_var = gen.next - 1;
      out.push_back(std::move(q));
    }
  }
  return out;
}

namespace {

bool inputs_subset(const Query& a, const Query& b) {
  if (a.pred != b.pred || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (a.args[i].input_mode && !b.args[i].input_mode) return false;
  return true;
}

bool same_modes(const Query& a, const Query& b) {
  return inputs_subset(a, b) && inputs_subset(b, a);
}

}  // namespace

void infer_by_mode_subsumption(std::vector<ModeVerdict>& entries) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const ModeVerdict& src : entries) {
      if (!src.verdict) continue;
      if (*src.verdict != Verdict::Terminating &&
          *src.verdict != Verdict::PredictedTerminating)
        continue;
      for (ModeVerdict& dst : entries) {
        if (dst.verdict || same_modes(src.query, dst.query)) continue;
        if (!inputs_subset(src.query, dst.query)) continue;
        dst.verdict = src.verdict;
        dst.inferred = true;
        changed = true;
      }
    }
  }
}

std::vector<Report> run_all_modes(const Program& p,
                                  const PredictorConfig& cfg) {
  std::vector<Query> queries = most_general_moded_queries(p);
  std::vector<ModeVerdict> table;
  table.reserve(queries.size());
  for (const Query& q : queries) table.push_back({q, std::nullopt, false});

  std::vector<std::size_t> order(queries.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto input_count = [&](std::size_t ix) {
    std::size_t c = 0;
    for (const auto& a : queries[ix].args) c += a.input_mode ? 1 : 0;
    return c;
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return input_count(a) < input_count(b);
                   });

  std::vector<Report> reports(queries.size());
  for (std::size_t ix : order) {
    infer_by_mode_subsumption(table);
    if (table[ix].verdict) {
      Report rep;
      rep.verdict = *table[ix].verdict;
      rep.inferred = true;
      rep.r = cfg.r;
      rep.pruning = cfg.pruning;
      rep.query = queries[ix].text();
      reports[ix] = std::move(rep);
      continue;
    }
    Report rep = predict(p, queries[ix], cfg);
    table[ix].verdict = rep.verdict;
    reports[ix] = std::move(rep);
  }
  return reports;
}

nlohmann::json report_to_json(const Report& r) {
  nlohmann::json j;
  j["verdict"] = verdict_name(r.verdict);
  j["r"] = r.r;
  j["pruning"] = pruning_name(r.pruning);
  j["nodeCount"] = r.node_count;
  j["elapsedMs"] = r.elapsed_ms;
  j["query"] = r.query;
  j["inferred"] = r.inferred;
  if (r.witness) {
    nlohmann::json w;
    w["positions"] = r.witness->positions;
    w["clause"] = r.witness->clause;
    w["derivation"] = nlohmann::json::array();
    for (const auto& s : r.witness->derivation) {
      w["derivation"].push_back({{"nodeId", s.node},
                                 {"goal", s.goal},
                                 {"clause", s.clause},
                                 {"mgu", s.mgu}});
    }
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  j["cuts"] = nlohmann::json::array();
  for (const auto& c : r.cuts)
    j["cuts"].push_back(
        {{"node", c.node}, {"clause", c.clause}, {"positions", c.positions}});
  j["prunes"] = nlohmann::json::array();
  for (const auto& pe : r.prunes)
    j["prunes"].push_back({{"node", pe.node},
                           {"clause", pe.clause},
                           {"matched", pe.matched}});
  return j;
}

std::string report_to_text(const Report& r) {
  std::ostringstream os;
  os << "query:    " << r.query << "\n";
  os << "verdict:  " << verdict_name(r.verdict);
  if (r.inferred) os << " (inferred by mode subsumption)";
  os << "\n";
  os << "r:        " << r.r << "\n";
  os << "pruning:  " << pruning_name(r.pruning) << "\n";
  os << "nodes:    " << r.node_count << "\n";
  os << "time:     " << r.elapsed_ms << " ms\n";
  os << "lp-cuts:  " << r.cuts.size() << "\n";
  os << "prunes:   " << r.prunes.size() << "\n";
  if (r.witness) {
    os << "witness:  clause " << r.witness->clause << " at nodes";
    for (NodeId n : r.witness->positions) os << " N" << n;
    os << "\n";
    for (const auto& s : r.witness->derivation) {
      os << "  N" << s.node << ": " << s.goal;
      if (!s.clause.empty()) os << "  =>[" << s.clause << "]";
      if (!s.mgu.empty()) os << " " << s.mgu;
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace termpred
