#include "robsense/lrobust.hpp"

#include <algorithm>
#include <stdexcept>

namespace robsense {

std::string to_string(Deficit d) { return d == Deficit::Tip ? "tip" : "sink"; }

std::vector<std::pair<Edge, bool>> failure_units(const StateDigraph& g, bool undirected) {
  std::vector<std::pair<Edge, bool>> units;
  for (const Edge& e : g.edges()) {
    if (undirected && g.is_undirected_pair(e.first, e.second)) {
      if (e.first < e.second) units.push_back({e, true});
    } else {
      units.push_back({e, false});
    }
  }
  return units;
}

namespace {

struct Corrupted {
  StateDigraph h;
  SccDecomposition scc;
  std::vector<int> uncovered;  // sink component ids of h missing f
  int tip_shortfall = 0;       // left copies outside f that cannot be matched

  Corrupted(const StateDigraph& g, const VertexSet& f, const SensitiveLink& l)
      : h(g.without_link(l.link, l.undirected)), scc(scc_decompose(h)) {
    for (int c : scc.sinks) {
      const auto& comp = scc.components[c];
      if (std::none_of(comp.begin(), comp.end(), [&](int v) { return f.count(v) > 0; }))
        uncovered.push_back(c);
    }
    counters().decompositions_run.fetch_add(1, std::memory_order_relaxed);
    tip_shortfall = h.n() - static_cast<int>(f.size()) - max_matching(h, f).size;
  }

  bool feasible_with(const VertexSet& f, const std::vector<int>& extra) const {
    VertexSet t = f;
    t.insert(extra.begin(), extra.end());
    counters().candidates_tested.fetch_add(1, std::memory_order_relaxed);
    return is_feasible(h, scc, t);
  }
};

VertexSet singles_of(const Corrupted& c, const VertexSet& f, Deficit kind) {
  VertexSet out;
  if (c.uncovered.size() > 1) return out;
  if (kind == Deficit::Sink) {
    if (c.tip_shortfall > 0 || c.uncovered.empty()) return out;
    const auto& comp = c.scc.components[c.uncovered[0]];
    return VertexSet(comp.begin(), comp.end());
  }
  if (c.tip_shortfall > 1) return out;
  VertexSet t = f;
  for (int x = 1; x <= c.h.n(); ++x) {
    if (f.count(x)) continue;
    if (!c.uncovered.empty() && c.scc.component_of[x] != c.uncovered[0]) continue;
    counters().candidates_tested.fetch_add(1, std::memory_order_relaxed);
    t.insert(x);
    if (tips_condition(c.h, t)) out.insert(x);
    t.erase(x);
  }
  return out;
}

// Unmatched left copies of a maximum matching plus one vertex per still
// uncovered sink; always a completion, used when no pair suffices.
std::vector<int> constructive_completion(const Corrupted& c, const VertexSet& f) {
  Matching m = max_matching(c.h, f);
  VertexSet add;
  for (int u = 1; u <= c.h.n(); ++u)
    if (!f.count(u) && m.mate_out[u] == 0) add.insert(u);
  for (int comp : c.uncovered) {
    const auto& vs = c.scc.components[comp];
    if (std::none_of(vs.begin(), vs.end(), [&](int v) { return add.count(v) > 0; }))
      add.insert(vs.back());
  }
  return {add.begin(), add.end()};
}

}  // namespace

std::vector<SensitiveLink> sensitive_links(const StateDigraph& g, const VertexSet& f,
                                           bool undirected) {
  if (!is_feasible(g, f)) throw std::invalid_argument("sensor set is infeasible on the intact digraph");
  std::vector<SensitiveLink> out;
  for (const auto& [e, joint] : failure_units(g, undirected)) {
    counters().links_tested.fetch_add(1, std::memory_order_relaxed);
    StateDigraph h = g.without_link(e, joint);
    SensitiveLink l{e, joint, Deficit::Tip, 0};
    if (!tips_condition(h, f)) {
      l.kind = Deficit::Tip;
    } else if (!sinks_condition(scc_decompose(h), f)) {
      l.kind = Deficit::Sink;
    } else {
      continue;
    }
    l.index = static_cast<int>(out.size()) + 1;
    out.push_back(l);
  }
  return out;
}

VertexSet sink_completions(const StateDigraph& g, const VertexSet& f, const SensitiveLink& link) {
  if (link.kind != Deficit::Sink) throw std::invalid_argument("link is not a sink deficit");
  Corrupted c(g, f, link);
  return singles_of(c, f, Deficit::Sink);
}

VertexSet tip_completions(const StateDigraph& g, const VertexSet& f, const SensitiveLink& link) {
  if (link.kind != Deficit::Tip) throw std::invalid_argument("link is not a tip deficit");
  Corrupted c(g, f, link);
  return singles_of(c, f, Deficit::Tip);
}

CompletionFamily completion_family(const StateDigraph& g, const VertexSet& f,
                                   const std::vector<SensitiveLink>& links) {
  CompletionFamily fam;
  for (const SensitiveLink& l : links) {
    Corrupted c(g, f, l);
    auto& out = fam.per_link.emplace_back();
    VertexSet singles = singles_of(c, f, l.kind);
    for (int x : singles) out.push_back({x});

    const int deficits = c.tip_shortfall + static_cast<int>(c.uncovered.size());
    if (deficits >= 2) {
      // One vertex cannot always repair both; collect the minimal pairs.
      VertexSet in_uncovered;
      for (int comp : c.uncovered)
        for (int v : c.scc.components[comp]) in_uncovered.insert(v);
      for (int a = 1; a <= g.n(); ++a) {
        if (f.count(a) || singles.count(a)) continue;
        for (int b = a + 1; b <= g.n(); ++b) {
          if (f.count(b) || singles.count(b)) continue;
          if (!in_uncovered.empty() && !in_uncovered.count(a) && !in_uncovered.count(b)) continue;
          if (c.feasible_with(f, {a, b})) out.push_back({a, b});
        }
      }
      if (out.empty()) out.push_back(constructive_completion(c, f));
    }
  }
  return fam;
}

BackupCover build_link_cover(int n, const CompletionFamily& family) {
  return build_backup_cover(n, family.per_link);
}

LRobustResult lrobust_solution(const StateDigraph& g, CoverMode mode, bool undirected,
                               const std::optional<VertexSet>& seed) {
  LRobustResult r;
  r.mode = mode;
  r.undirected = undirected;
  r.seed = seed ? *seed : minimal_feasible(g).all();
  r.links = sensitive_links(g, r.seed, undirected);
  r.theta = completion_family(g, r.seed, r.links);
  r.cover = build_link_cover(g.n(), r.theta);
  try {
    r.choice = mode == CoverMode::Exact ? exact_union_cover(r.cover.instance, r.cover.payload)
                                        : greedy_cover(r.cover.instance);
  } catch (const Uncoverable& e) {
    const Edge& l = r.links[e.element() - 1].link;
    throw Uncoverable(e.element(), "no completion for sensitive link (" + std::to_string(l.first) +
                                       "," + std::to_string(l.second) + ")");
  }
  r.solution = r.seed;
  for (long long j : r.choice.chosen)
    for (int v : r.cover.payload.at(j)) r.solution.insert(v);
  return r;
}

bool is_link_robust(const StateDigraph& g, const VertexSet& f, bool undirected) {
  if (!is_feasible(g, f)) return false;
  for (const auto& [e, joint] : failure_units(g, undirected))
    if (!is_feasible(g.without_link(e, joint), f)) return false;
  return true;
}

}  // namespace robsense
