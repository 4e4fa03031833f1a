#pragma once

#include <vector>

#include "robsense/bipartite.hpp"
#include "robsense/digraph.hpp"

namespace robsense {

// Matching in the bipartite split: left u (out-role) to right v (in-role) per edge (u, v).
struct Matching {
  std::vector<int> mate_out;  // vertex -> matched successor, 0 if none
  std::vector<int> mate_in;   // vertex -> matched predecessor, 0 if none
  int size = 0;
};

struct PncDecomposition {
  std::vector<std::vector<int>> paths;
  std::vector<std::vector<int>> cycles;
  VertexSet tips;
};

struct FeasibleSolution {
  VertexSet tips_part;
  VertexSet sink_part;

  VertexSet all() const;
};

// Left copies in `banned_left` are removed before matching.
Matching max_matching(const StateDigraph& g, const VertexSet& banned_left = {});

// Paths follow mate_out; a chain that closes on itself is a cycle.
PncDecomposition decomposition_from_matching(const StateDigraph& g, const Matching& m);
PncDecomposition min_pnc(const StateDigraph& g);

// True iff some spanning P&C decomposition has exactly `forced` as its path tips.
bool can_force_tips(const StateDigraph& g, const VertexSet& forced);

bool is_feasible(const StateDigraph& g, const VertexSet& f);
bool is_feasible(const StateDigraph& g, const SccDecomposition& scc, const VertexSet& f);

// Both conditions split out, so link analysis can tell which one broke.
bool tips_condition(const StateDigraph& g, const VertexSet& f);
bool sinks_condition(const SccDecomposition& scc, const VertexSet& f);

// Minimum-cardinality feasible solution. Among optimal tip sets the one that is
// largest in reverse lexicographic order is taken; tip-free sinks contribute
// their highest vertex.
FeasibleSolution minimal_feasible(const StateDigraph& g);

// Decomposition whose tips are exactly `tips` (which must be forceable).
PncDecomposition decomposition_with_tips(const StateDigraph& g, const VertexSet& tips);

}  // namespace robsense
