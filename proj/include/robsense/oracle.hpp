#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "robsense/digraph.hpp"

namespace robsense {

// Mersenne prime 2^61 - 1.
inline constexpr std::uint64_t kFieldPrime = (std::uint64_t{1} << 61) - 1;

// Rank of the observability stack for one random realization over F_q.
int realization_rank(const StateDigraph& g, const VertexSet& f, std::uint64_t seed);

// Majority vote over three realizations drawn from `seed`.
bool numeric_observable(const StateDigraph& g, const VertexSet& f, std::uint64_t seed);

// Generic rank by polynomial expansion of the maximal minors. Only for n <= 4.
bool symbolic_observable(const StateDigraph& g, const VertexSet& f);

bool is_sensor_robust(const StateDigraph& g, const VertexSet& f);

// Smallest set (then lexicographically least) passing the predicate, optionally
// restricted to supersets of `base`. Throws std::length_error when n > limit.
std::optional<VertexSet> exhaustive_srobust(const StateDigraph& g, int limit = 8,
                                            const VertexSet& base = {});
std::optional<VertexSet> exhaustive_lrobust(const StateDigraph& g, int limit = 8,
                                            const VertexSet& base = {}, bool undirected = false);
std::optional<VertexSet> exhaustive_feasible(const StateDigraph& g, int limit = 12);

struct SetSystem {
  int p = 0;                          // universe {1..p}
  std::vector<std::vector<int>> sets; // C_1..C_k
};

// Throws std::invalid_argument if p < 1, some set is empty or leaves the
// universe, or some element is uncovered.
void validate(const SetSystem& s);
int min_cover_size(const SetSystem& s);

// Hardness gadgets built from the reduction matrices (entry (a, b) is the edge b -> a).
StateDigraph sensor_gadget(const SetSystem& s);
StateDigraph link_gadget(const SetSystem& s);

}  // namespace robsense
