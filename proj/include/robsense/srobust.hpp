#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "robsense/digraph.hpp"
#include "robsense/pnc.hpp"
#include "robsense/setcover.hpp"

namespace robsense {

enum class CoverMode { Greedy, Exact };

// Back-up sets per seed member. Index i (1-based) refers to members[i-1]: the
// tips in ascending order, followed by the sink picks in ascending order.
struct BackupFamily {
  std::vector<int> members;
  int tip_count = 0;
  std::vector<std::vector<std::vector<int>>> per_index;
  // Indices whose member can be lost without any replacement.
  std::vector<int> self_covered;
};

// Cover instance together with the vertex set behind each set id.
struct BackupCover {
  CoverInstance instance;
  std::map<long long, std::vector<int>> payload;
};

struct SRobustResult {
  FeasibleSolution seed;
  BackupFamily omega;
  BackupCover cover;
  CoverSolution choice;
  CoverMode mode = CoverMode::Greedy;
  VertexSet solution;
};

std::vector<int> sink_alternatives(const StateDigraph& g, const SccDecomposition& scc, int x);
std::vector<int> tip_alternatives(const StateDigraph& g, const VertexSet& tips, int t);

BackupFamily backup_family(const StateDigraph& g, const FeasibleSolution& f);

// Singletons map to themselves; a pair a < b maps past n by the shifted Cantor pairing.
long long z_index(int n, int a, int b = 0);
// Inverse of z_index: {a, 0} for singletons.
std::pair<int, int> z_decode(int n, long long j);

// Shared by the sensor and link covers. Index i+1 of the universe is backed by
// per_index[i]; indices listed in `skip` need no back-up and are left out.
BackupCover build_backup_cover(int n, const std::vector<std::vector<std::vector<int>>>& per_index,
                               const std::vector<int>& skip = {});

BackupCover build_sensor_cover(int n, const BackupFamily& family);

// Throws Uncoverable with the failing index when some member has no back-up.
SRobustResult srobust_solution(const StateDigraph& g, CoverMode mode,
                               const std::optional<FeasibleSolution>& seed = std::nullopt);

// Seed tips supplied by the caller; sinks left without a tip get their highest vertex.
FeasibleSolution seed_from_tips(const StateDigraph& g, const VertexSet& tips);

// Reference strategy: a minimal feasible solution joined with a feasible solution
// disjoint from it. Empty when no disjoint partner exists.
std::optional<VertexSet> disjoint_pair_baseline(const StateDigraph& g);

}  // namespace robsense
