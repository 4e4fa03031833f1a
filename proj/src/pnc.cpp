#include "robsense/pnc.hpp"

#include <stdexcept>

namespace robsense {

namespace {

Bipartite split_graph(const StateDigraph& g, const std::vector<char>& banned, int extra_right = 0) {
  Bipartite b;
  b.nl = g.n();
  b.nr = g.n() + extra_right;
  b.adj.resize(g.n());
  for (int u = 1; u <= g.n(); ++u) {
    if (banned[u]) continue;
    for (int v : g.out(u)) b.adj[u - 1].push_back(v - 1);
  }
  return b;
}

std::vector<char> mask_of(int n, const VertexSet& s) {
  std::vector<char> m(n + 1, 0);
  for (int v : s)
    if (v >= 1 && v <= n) m[v] = 1;
  return m;
}

int in_range_count(int n, const VertexSet& s) {
  int c = 0;
  for (int v : s)
    if (v >= 1 && v <= n) ++c;
  return c;
}

Matching to_matching(int n, const std::vector<int>& ml, int nr_original) {
  Matching m;
  m.mate_out.assign(n + 1, 0);
  m.mate_in.assign(n + 1, 0);
  for (int u = 0; u < n; ++u) {
    int v = ml[u];
    if (v >= 0 && v < nr_original) {
      m.mate_out[u + 1] = v + 1;
      m.mate_in[v + 1] = u + 1;
      ++m.size;
    }
  }
  return m;
}

// Tip selection with one virtual right vertex per sink-SCC: a left vertex left
// unmatched by the original edges may take the virtual vertex of its sink.
struct SinkAugmented {
  const StateDigraph& g;
  SccDecomposition scc;
  int base_size = 0;  // maximum matching of g
  int best_total = 0;

  explicit SinkAugmented(const StateDigraph& graph) : g(graph), scc(scc_decompose(graph)) {
    std::vector<int> ml, mr;
    base_size = hopcroft_karp(split_graph(g, mask_of(g.n(), {})), ml, mr);
    best_total = augmented_total({}, ml, mr);
  }

  int sinks() const { return static_cast<int>(scc.sinks.size()); }

  int augmented_total(const VertexSet& forced, std::vector<int> ml, std::vector<int> mr) const {
    Bipartite b = split_graph(g, mask_of(g.n(), forced), sinks());
    for (int k = 0; k < sinks(); ++k)
      for (int v : scc.components[scc.sinks[k]]) b.adj[v - 1].push_back(g.n() + k);
    ml.resize(b.nl, -1);
    mr.resize(b.nr, -1);
    return hopcroft_karp(b, ml, mr);
  }

  // Whether some optimal tip set contains `forced`.
  bool extendable(const VertexSet& forced) const {
    counters().decompositions_run.fetch_add(1, std::memory_order_relaxed);
    std::vector<int> ml, mr;
    int sz = hopcroft_karp(split_graph(g, mask_of(g.n(), forced)), ml, mr);
    if (sz != base_size) return false;
    return augmented_total(forced, ml, mr) == best_total;
  }
};

}  // namespace

VertexSet FeasibleSolution::all() const {
  VertexSet s = tips_part;
  s.insert(sink_part.begin(), sink_part.end());
  return s;
}

Matching max_matching(const StateDigraph& g, const VertexSet& banned_left) {
  std::vector<int> ml, mr;
  hopcroft_karp(split_graph(g, mask_of(g.n(), banned_left)), ml, mr);
  return to_matching(g.n(), ml, g.n());
}

PncDecomposition decomposition_from_matching(const StateDigraph& g, const Matching& m) {
  const int n = g.n();
  PncDecomposition d;
  std::vector<char> seen(n + 1, 0);
  for (int s = 1; s <= n; ++s) {
    if (m.mate_in[s] != 0) continue;
    std::vector<int> path;
    for (int v = s; v != 0; v = m.mate_out[v]) {
      seen[v] = 1;
      path.push_back(v);
    }
    d.tips.insert(path.back());
    d.paths.push_back(std::move(path));
  }
  for (int s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    std::vector<int> cyc;
    for (int v = s; !seen[v]; v = m.mate_out[v]) {
      seen[v] = 1;
      cyc.push_back(v);
    }
    d.cycles.push_back(std::move(cyc));
  }
  return d;
}

PncDecomposition decomposition_with_tips(const StateDigraph& g, const VertexSet& tips) {
  Matching m = max_matching(g, tips);
  if (m.size != g.n() - in_range_count(g.n(), tips))
    throw std::invalid_argument("vertex set is not a tip set of any decomposition");
  return decomposition_from_matching(g, m);
}

PncDecomposition min_pnc(const StateDigraph& g) {
  counters().decompositions_run.fetch_add(1, std::memory_order_relaxed);
  return decomposition_with_tips(g, minimal_feasible(g).tips_part);
}

bool can_force_tips(const StateDigraph& g, const VertexSet& forced) {
  counters().decompositions_run.fetch_add(1, std::memory_order_relaxed);
  for (int v : forced)
    if (v < 1 || v > g.n()) return false;
  return max_matching(g, forced).size == g.n() - static_cast<int>(forced.size());
}

bool tips_condition(const StateDigraph& g, const VertexSet& f) {
  counters().decompositions_run.fetch_add(1, std::memory_order_relaxed);
  return max_matching(g, f).size == g.n() - in_range_count(g.n(), f);
}

bool sinks_condition(const SccDecomposition& scc, const VertexSet& f) {
  for (int c : scc.sinks) {
    bool hit = false;
    for (int v : scc.components[c])
      if (f.count(v)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

bool is_feasible(const StateDigraph& g, const SccDecomposition& scc, const VertexSet& f) {
  if (g.n() == 0) return true;
  return sinks_condition(scc, f) && tips_condition(g, f);
}

bool is_feasible(const StateDigraph& g, const VertexSet& f) {
  return is_feasible(g, scc_decompose(g), f);
}

FeasibleSolution minimal_feasible(const StateDigraph& g) {
  FeasibleSolution sol;
  const int n = g.n();
  if (n == 0) return sol;
  SinkAugmented aug(g);
  const int need = n - aug.base_size;
  VertexSet chosen;
  for (int v = n; v >= 1 && static_cast<int>(chosen.size()) < need; --v) {
    chosen.insert(v);
    if (!aug.extendable(chosen)) chosen.erase(v);
  }
  if (static_cast<int>(chosen.size()) != need)
    throw std::logic_error("tip selection did not reach a full tip set");
  sol.tips_part = chosen;
  for (int c : aug.scc.sinks) {
    const auto& comp = aug.scc.components[c];
    bool hit = false;
    for (int v : comp)
      if (chosen.count(v)) hit = true;
    if (!hit) sol.sink_part.insert(comp.back());
  }
  return sol;
}

}  // namespace robsense
