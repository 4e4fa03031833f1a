#include "robsense/netgen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "robsense/rng.hpp"

namespace robsense {

std::string model_name(Model m) {
  switch (m) {
    case Model::ER: return "er";
    case Model::SmallWorld: return "small-world";
    case Model::ScaleFree: return "scale-free";
  }
  return "?";
}

Model parse_model(const std::string& s) {
  if (s == "er" || s == "erdos-renyi") return Model::ER;
  if (s == "small-world" || s == "sw") return Model::SmallWorld;
  if (s == "scale-free" || s == "sf") return Model::ScaleFree;
  throw std::invalid_argument("unknown model '" + s + "'");
}

void validate(const GenSpec& s) {
  auto fail = [](const std::string& m) { throw std::invalid_argument(m); };
  if (s.n < 1) fail("n must be at least 1");
  if (!(s.direct_fraction >= 0 && s.direct_fraction <= 1)) fail("direct fraction must lie in [0,1]");
  switch (s.model) {
    case Model::ER:
      if (!(s.prob >= 0 && s.prob <= 1)) fail("edge probability must lie in [0,1]");
      break;
    case Model::SmallWorld:
      if (s.ring_degree < 2 || s.ring_degree % 2 != 0) fail("ring degree must be even and >= 2");
      if (s.ring_degree >= s.n) fail("ring degree must be below n");
      if (!(s.rewire >= 0 && s.rewire <= 1)) fail("rewiring probability must lie in [0,1]");
      break;
    case Model::ScaleFree:
      if (s.d < 1) fail("d must be at least 1");
      if (s.d >= s.n) fail("d must be below n");
      break;
  }
}

namespace {

using PairSet = std::set<Edge>;

void link(PairSet& pairs, int a, int b) { pairs.insert({std::min(a, b), std::max(a, b)}); }
bool linked(const PairSet& pairs, int a, int b) {
  return pairs.count({std::min(a, b), std::max(a, b)}) > 0;
}

PairSet small_world(const GenSpec& s, SplitMix64& rng) {
  PairSet pairs;
  const int half = s.ring_degree / 2;
  std::vector<Edge> ring;
  for (int i = 0; i < s.n; ++i)
    for (int k = 1; k <= half; ++k) ring.push_back({i + 1, (i + k) % s.n + 1});
  for (auto [a, b] : ring) link(pairs, a, b);
  for (auto [a, b] : ring) {
    if (rng.uniform() >= s.rewire) continue;
    int w = static_cast<int>(rng.below(s.n)) + 1;
    if (w == a || linked(pairs, a, w)) continue;  // keep the ring edge
    pairs.erase({std::min(a, b), std::max(a, b)});
    link(pairs, a, w);
  }
  return pairs;
}

PairSet scale_free(const GenSpec& s, SplitMix64& rng) {
  PairSet pairs;
  std::vector<int> ends;  // every edge endpoint, so sampling is degree-proportional
  const int m0 = std::min(s.n, s.d + 1);
  for (int a = 1; a <= m0; ++a)
    for (int b = a + 1; b <= m0; ++b) {
      link(pairs, a, b);
      ends.push_back(a);
      ends.push_back(b);
    }
  for (int v = m0 + 1; v <= s.n; ++v) {
    std::set<int> targets;
    while (static_cast<int>(targets.size()) < s.d) targets.insert(ends[rng.below(ends.size())]);
    for (int t : targets) {
      link(pairs, v, t);
      ends.push_back(v);
      ends.push_back(t);
    }
  }
  return pairs;
}

StateDigraph switch_directions(int n, const PairSet& pairs, double fraction, SplitMix64& rng) {
  std::vector<Edge> list(pairs.begin(), pairs.end());
  const std::size_t count = static_cast<std::size_t>(std::floor(fraction * list.size() + 1e-9));
  // Partial Fisher-Yates: the first `count` entries are the switched pairs.
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t j = i + rng.below(list.size() - i);
    std::swap(list[i], list[j]);
  }
  StateDigraph g(n);
  for (std::size_t i = 0; i < list.size(); ++i) {
    auto [a, b] = list[i];
    if (i < count) {
      if (rng.below(2))
        g.add_edge(a, b);
      else
        g.add_edge(b, a);
    } else {
      g.add_undirected(a, b);
    }
  }
  return g;
}

}  // namespace

StateDigraph generate(const GenSpec& spec) {
  validate(spec);
  SplitMix64 rng(spec.seed);
  if (spec.model == Model::ER) {
    StateDigraph g(spec.n);
    for (int u = 1; u <= spec.n; ++u)
      for (int v = 1; v <= spec.n; ++v)
        if (u != v && rng.uniform() < spec.prob) g.add_edge(u, v);
    return g;
  }
  PairSet pairs = spec.model == Model::SmallWorld ? small_world(spec, rng) : scale_free(spec, rng);
  return switch_directions(spec.n, pairs, spec.direct_fraction, rng);
}

}  // namespace robsense
