#pragma once

#include <string>

#include "robsense/digraph.hpp"
#include "robsense/rng.hpp"

namespace testing {

inline std::string fixture(const std::string& name) {
  return std::string(ROBSENSE_FIXTURE_DIR) + "/" + name;
}

// Each ordered pair (self-loops included) independently with probability p.
inline robsense::StateDigraph random_digraph(robsense::SplitMix64& rng, int n, double p,
                                             bool loops = true) {
  robsense::StateDigraph g(n);
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v)
      if ((loops || u != v) && rng.uniform() < p) g.add_edge(u, v);
  return g;
}

// Random mix of one-way edges and undirected pairs, no self-loops.
inline robsense::StateDigraph random_mixed(robsense::SplitMix64& rng, int n, double p,
                                           double pair_share) {
  robsense::StateDigraph g(n);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      if (rng.uniform() >= p) continue;
      if (rng.uniform() < pair_share)
        g.add_undirected(a, b);
      else if (rng.below(2))
        g.add_edge(a, b);
      else
        g.add_edge(b, a);
    }
  return g;
}

inline robsense::VertexSet random_subset(robsense::SplitMix64& rng, int n, double p) {
  robsense::VertexSet s;
  for (int v = 1; v <= n; ++v)
    if (rng.uniform() < p) s.insert(v);
  return s;
}

}  // namespace testing
