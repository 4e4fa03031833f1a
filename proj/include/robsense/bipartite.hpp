#pragma once

#include <atomic>
#include <cstdint>
#include <vector>

namespace robsense {

// Process-wide operation counters. Safe to bump from concurrent analyses.
struct Counters {
  std::atomic<std::uint64_t> matchings_run{0};
  std::atomic<std::uint64_t> decompositions_run{0};
  std::atomic<std::uint64_t> links_tested{0};
  std::atomic<std::uint64_t> candidates_tested{0};
};

struct CounterSnapshot {
  std::uint64_t matchings_run = 0;
  std::uint64_t decompositions_run = 0;
  std::uint64_t links_tested = 0;
  std::uint64_t candidates_tested = 0;

  CounterSnapshot operator-(const CounterSnapshot& o) const {
    return {matchings_run - o.matchings_run, decompositions_run - o.decompositions_run,
            links_tested - o.links_tested, candidates_tested - o.candidates_tested};
  }
};

Counters& counters();
CounterSnapshot snapshot();
void reset_counters();

// Bipartite graph with left vertices 0..nl-1 and right vertices 0..nr-1.
struct Bipartite {
  int nl = 0;
  int nr = 0;
  std::vector<std::vector<int>> adj;  // left -> rights, scanned in order
};

// Hopcroft-Karp. mate_l / mate_r may carry a valid partial matching to extend;
// unmatched entries are -1. Returns the final matching size.
int hopcroft_karp(const Bipartite& b, std::vector<int>& mate_l, std::vector<int>& mate_r);

}  // namespace robsense
