#include "robsense/srobust.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace robsense {

std::vector<int> sink_alternatives(const StateDigraph& g, const SccDecomposition& scc, int x) {
  if (x < 1 || x > g.n() || !scc.in_sink(x))
    throw std::invalid_argument("vertex " + std::to_string(x) + " is not in a sink-SCC");
  std::vector<int> out;
  for (int v : scc.components[scc.component_of[x]])
    if (v != x) out.push_back(v);
  return out;
}

std::vector<int> tip_alternatives(const StateDigraph& g, const VertexSet& tips, int t) {
  if (!tips.count(t)) throw std::invalid_argument("vertex " + std::to_string(t) + " is not a tip");
  std::vector<int> out;
  VertexSet trial = tips;
  trial.erase(t);
  for (int x = 1; x <= g.n(); ++x) {
    if (tips.count(x)) continue;
    counters().candidates_tested.fetch_add(1, std::memory_order_relaxed);
    trial.insert(x);
    if (can_force_tips(g, trial)) out.push_back(x);
    trial.erase(x);
  }
  return out;
}

namespace {

void add_backup(std::vector<std::vector<int>>& into, std::vector<int> omega, const VertexSet& f,
                bool& emptied) {
  std::erase_if(omega, [&](int v) { return f.count(v) > 0; });
  if (omega.empty()) {
    emptied = true;
    return;
  }
  std::sort(omega.begin(), omega.end());
  if (std::find(into.begin(), into.end(), omega) == into.end()) into.push_back(std::move(omega));
}

}  // namespace

BackupFamily backup_family(const StateDigraph& g, const FeasibleSolution& f) {
  const SccDecomposition scc = scc_decompose(g);
  const VertexSet all = f.all();
  if (!is_feasible(g, scc, all)) throw std::invalid_argument("seed solution is infeasible");
  if (!can_force_tips(g, f.tips_part))
    throw std::invalid_argument("seed tips are not the tips of any decomposition");

  BackupFamily fam;
  fam.members.assign(f.tips_part.begin(), f.tips_part.end());
  fam.tip_count = static_cast<int>(fam.members.size());
  fam.members.insert(fam.members.end(), f.sink_part.begin(), f.sink_part.end());
  fam.per_index.resize(fam.members.size());

  for (std::size_t i = 0; i < fam.members.size(); ++i) {
    const int x = fam.members[i];
    auto& out = fam.per_index[i];
    bool emptied = false;
    VertexSet rest = all;
    rest.erase(x);
    if (static_cast<int>(i) < fam.tip_count) {
      for (int delta : tip_alternatives(g, f.tips_part, x)) {
        VertexSet trial = rest;
        trial.insert(delta);
        counters().candidates_tested.fetch_add(1, std::memory_order_relaxed);
        if (is_feasible(g, scc, trial)) {
          add_backup(out, {delta}, all, emptied);
          continue;
        }
        if (!scc.in_sink(x)) continue;
        for (int y : scc.components[scc.component_of[x]]) {
          if (y == x || y == delta) continue;
          trial.insert(y);
          counters().candidates_tested.fetch_add(1, std::memory_order_relaxed);
          if (is_feasible(g, scc, trial)) add_backup(out, {delta, y}, all, emptied);
          trial.erase(y);
        }
      }
    } else {
      for (int y : sink_alternatives(g, scc, x)) {
        VertexSet trial = rest;
        trial.insert(y);
        counters().candidates_tested.fetch_add(1, std::memory_order_relaxed);
        if (is_feasible(g, scc, trial)) add_backup(out, {y}, all, emptied);
      }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    if (emptied) fam.self_covered.push_back(static_cast<int>(i) + 1);
  }
  return fam;
}

long long z_index(int n, int a, int b) {
  if (a < 1 || a > n) throw std::out_of_range("vertex index out of range");
  if (b == 0) return a;
  if (b > n) throw std::out_of_range("vertex index out of range");
  if (a >= b) throw std::invalid_argument("pair must satisfy a < b");
  long long s = static_cast<long long>(a) + b;
  return (s - 2) * (s - 1) / 2 + b - 1 + n;
}

std::pair<int, int> z_decode(int n, long long j) {
  if (j >= 1 && j <= n) return {static_cast<int>(j), 0};
  long long z = j - n;
  if (z < 0) throw std::out_of_range("index out of range");
  long long w = static_cast<long long>((std::sqrt(8.0L * z + 1) - 1) / 2);
  while (w * (w + 1) / 2 > z) --w;
  while ((w + 1) * (w + 2) / 2 <= z) ++w;
  long long y = z - w * (w + 1) / 2;
  long long x = w - y;
  int a = static_cast<int>(x + 1), b = static_cast<int>(y + 1);
  if (a >= b || b > n) throw std::out_of_range("index does not encode a pair");
  return {a, b};
}

BackupCover build_backup_cover(int n, const std::vector<std::vector<std::vector<int>>>& per_index,
                               const std::vector<int>& skip) {
  BackupCover bc;
  std::map<long long, std::set<int>> single, own_pair;
  std::map<std::vector<int>, std::set<int>> own_big;
  const VertexSet self(skip.begin(), skip.end());
  for (std::size_t i = 0; i < per_index.size(); ++i) {
    const int idx = static_cast<int>(i) + 1;
    if (self.count(idx)) continue;
    bc.instance.universe.push_back(idx);
    for (const auto& omega : per_index[i]) {
      if (omega.size() == 1)
        single[omega[0]].insert(idx);
      else if (omega.size() == 2)
        own_pair[z_index(n, omega[0], omega[1])].insert(idx);
      else
        own_big[omega].insert(idx);
    }
  }
  for (const auto& [j, members] : single) {
    bc.instance.add_set(j, {members.begin(), members.end()}, Rational(1));
    bc.payload[j] = {static_cast<int>(j)};
  }
  // A pair set exists only when the pair itself backs some index; it then also
  // covers whatever its two members cover alone.
  for (const auto& [j, members] : own_pair) {
    auto [a, b] = z_decode(n, j);
    std::set<int> cov = members;
    if (single.count(a)) cov.insert(single[a].begin(), single[a].end());
    if (single.count(b)) cov.insert(single[b].begin(), single[b].end());
    bc.instance.add_set(j, {cov.begin(), cov.end()}, Rational(2));
    bc.payload[j] = {a, b};
  }
  // Larger sets only arise from joint link removals; they are numbered past the pairs.
  long long next = n >= 2 ? z_index(n, n - 1, n) + 1 : n + 1;
  for (const auto& [omega, members] : own_big) {
    std::set<int> cov = members;
    for (int v : omega)
      if (single.count(v)) cov.insert(single[v].begin(), single[v].end());
    bc.instance.add_set(next, {cov.begin(), cov.end()}, Rational(static_cast<long long>(omega.size())));
    bc.payload[next++] = omega;
  }
  return bc;
}

BackupCover build_sensor_cover(int n, const BackupFamily& family) {
  return build_backup_cover(n, family.per_index, family.self_covered);
}

FeasibleSolution seed_from_tips(const StateDigraph& g, const VertexSet& tips) {
  FeasibleSolution f;
  f.tips_part = tips;
  const SccDecomposition scc = scc_decompose(g);
  for (int c : scc.sinks) {
    const auto& comp = scc.components[c];
    bool hit = std::any_of(comp.begin(), comp.end(), [&](int v) { return tips.count(v) > 0; });
    if (!hit) f.sink_part.insert(comp.back());
  }
  return f;
}

SRobustResult srobust_solution(const StateDigraph& g, CoverMode mode,
                               const std::optional<FeasibleSolution>& seed) {
  SRobustResult r;
  r.mode = mode;
  r.seed = seed ? *seed : minimal_feasible(g);
  r.omega = backup_family(g, r.seed);
  r.cover = build_sensor_cover(g.n(), r.omega);
  try {
    r.choice = mode == CoverMode::Exact ? exact_union_cover(r.cover.instance, r.cover.payload)
                                        : greedy_cover(r.cover.instance);
  } catch (const Uncoverable& e) {
    int idx = e.element();
    throw Uncoverable(idx, "no back-up for seed member x" +
                               std::to_string(r.omega.members[idx - 1]) + " (index " +
                               std::to_string(idx) + ")");
  }
  r.solution = r.seed.all();
  for (long long j : r.choice.chosen)
    for (int v : r.cover.payload.at(j)) r.solution.insert(v);
  return r;
}

std::optional<VertexSet> disjoint_pair_baseline(const StateDigraph& g) {
  const FeasibleSolution first = minimal_feasible(g);
  const VertexSet f1 = first.all();
  const int n = g.n();
  // Match the left copies of f1 first; augmenting never unmatches them, so the
  // final unmatched set avoids f1 whenever some maximum matching allows it.
  Bipartite b;
  b.nl = b.nr = n;
  b.adj.resize(n);
  for (int u = 1; u <= n; ++u)
    if (f1.count(u))
      for (int v : g.out(u)) b.adj[u - 1].push_back(v - 1);
  std::vector<int> ml, mr;
  hopcroft_karp(b, ml, mr);
  for (int u = 1; u <= n; ++u)
    if (!f1.count(u))
      for (int v : g.out(u)) b.adj[u - 1].push_back(v - 1);
  hopcroft_karp(b, ml, mr);
  VertexSet second;
  for (int u = 1; u <= n; ++u)
    if (ml[u - 1] == -1) {
      if (f1.count(u)) return std::nullopt;
      second.insert(u);
    }
  const SccDecomposition scc = scc_decompose(g);
  for (int c : scc.sinks) {
    const auto& comp = scc.components[c];
    if (std::any_of(comp.begin(), comp.end(), [&](int v) { return second.count(v) > 0; })) continue;
    int pick = 0;
    for (int v : comp)
      if (!f1.count(v)) pick = v;
    if (pick == 0) return std::nullopt;
    second.insert(pick);
  }
  VertexSet out = f1;
  out.insert(second.begin(), second.end());
  return out;
}

}  // namespace robsense
