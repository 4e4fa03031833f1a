#pragma once

#include <optional>
#include <string>
#include <vector>

#include "robsense/digraph.hpp"
#include "robsense/pnc.hpp"
#include "robsense/srobust.hpp"

namespace robsense {

enum class Deficit { Tip, Sink };

std::string to_string(Deficit d);

struct SensitiveLink {
  Edge link;
  bool undirected = false;  // both directions fail together
  Deficit kind = Deficit::Tip;
  int index = 0;            // 1-based position in the sensitive-link list
};

// Failure units: every directed edge, or in undirected mode every undirected pair
// plus the directed edges that are not part of a pair. Lexicographic order.
std::vector<std::pair<Edge, bool>> failure_units(const StateDigraph& g, bool undirected);

std::vector<SensitiveLink> sensitive_links(const StateDigraph& g, const VertexSet& f,
                                           bool undirected = false);

// Vertices of the single uncovered sink-SCC of the corrupted digraph.
VertexSet sink_completions(const StateDigraph& g, const VertexSet& f, const SensitiveLink& link);

// Vertices x outside f whose addition restores the matching condition. When the
// failure also leaves a sink-SCC uncovered, only vertices of that sink count.
VertexSet tip_completions(const StateDigraph& g, const VertexSet& f, const SensitiveLink& link);

struct CompletionFamily {
  // per_link[j] lists the minimal completions of link j+1: singletons first, then
  // pairs (only when one vertex cannot repair the failure on its own), then larger sets.
  std::vector<std::vector<std::vector<int>>> per_link;
};

CompletionFamily completion_family(const StateDigraph& g, const VertexSet& f,
                                   const std::vector<SensitiveLink>& links);

BackupCover build_link_cover(int n, const CompletionFamily& family);

struct LRobustResult {
  VertexSet seed;
  std::vector<SensitiveLink> links;
  CompletionFamily theta;
  BackupCover cover;
  CoverSolution choice;
  CoverMode mode = CoverMode::Greedy;
  bool undirected = false;
  VertexSet solution;
};

LRobustResult lrobust_solution(const StateDigraph& g, CoverMode mode, bool undirected = false,
                               const std::optional<VertexSet>& seed = std::nullopt);

// Survives every single failure unit (directed edges, or pairs in undirected mode).
bool is_link_robust(const StateDigraph& g, const VertexSet& f, bool undirected = false);

}  // namespace robsense
