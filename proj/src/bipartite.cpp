#include "robsense/bipartite.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace robsense {

Counters& counters() {
  static Counters c;
  return c;
}

CounterSnapshot snapshot() {
  Counters& c = counters();
  return {c.matchings_run.load(), c.decompositions_run.load(), c.links_tested.load(),
          c.candidates_tested.load()};
}

void reset_counters() {
  Counters& c = counters();
  c.matchings_run = 0;
  c.decompositions_run = 0;
  c.links_tested = 0;
  c.candidates_tested = 0;
}

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

struct HK {
  const Bipartite& b;
  std::vector<int>& ml;
  std::vector<int>& mr;
  std::vector<int> dist;
  std::vector<std::size_t> it;

  bool bfs() {
    std::queue<int> q;
    bool found = false;
    for (int u = 0; u < b.nl; ++u) {
      if (ml[u] == -1) {
        dist[u] = 0;
        q.push(u);
      } else {
        dist[u] = kInf;
      }
    }
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : b.adj[u]) {
        int w = mr[v];
        if (w == -1) {
          found = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  // Iterative layered DFS from free left vertex s.
  bool dfs(int s) {
    std::vector<int> path{s};
    while (!path.empty()) {
      int u = path.back();
      if (it[u] == b.adj[u].size()) {
        dist[u] = kInf;
        path.pop_back();
        continue;
      }
      int v = b.adj[u][it[u]];
      int w = mr[v];
      if (w == -1) {
        // Flip along the path; each left on the path points at its chosen right.
        for (std::size_t k = path.size(); k-- > 0;) {
          int lu = path[k];
          int rv = b.adj[lu][it[lu]];
          ml[lu] = rv;
          mr[rv] = lu;
        }
        return true;
      }
      if (dist[w] == dist[u] + 1) {
        path.push_back(w);
      } else {
        ++it[u];  // also reached after a child dead-ends and resets its dist
      }
    }
    return false;
  }
};

}  // namespace

int hopcroft_karp(const Bipartite& b, std::vector<int>& mate_l, std::vector<int>& mate_r) {
  counters().matchings_run.fetch_add(1, std::memory_order_relaxed);
  mate_l.resize(b.nl, -1);
  mate_r.resize(b.nr, -1);
  HK h{b, mate_l, mate_r, std::vector<int>(b.nl), std::vector<std::size_t>(b.nl)};
  int size = 0;
  for (int u = 0; u < b.nl; ++u)
    if (mate_l[u] != -1) ++size;
  while (h.bfs()) {
    std::fill(h.it.begin(), h.it.end(), 0);
    for (int u = 0; u < b.nl; ++u)
      if (mate_l[u] == -1 && h.dfs(u)) ++size;
  }
  return size;
}

}  // namespace robsense
