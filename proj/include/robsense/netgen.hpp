#pragma once

#include <cstdint>
#include <string>

#include "robsense/digraph.hpp"

namespace robsense {

enum class Model { ER, SmallWorld, ScaleFree };

std::string model_name(Model m);
Model parse_model(const std::string& s);  // "er", "small-world", "scale-free"

struct GenSpec {
  Model model = Model::ScaleFree;
  int n = 10;
  double prob = 0.1;           // ER edge probability per ordered pair
  int ring_degree = 4;         // small world
  double rewire = 0.1;         // small world
  int d = 1;                   // scale free: links per new node
  double direct_fraction = 0.10;
  std::uint64_t seed = 1;
};

void validate(const GenSpec& spec);

// Small-world and scale-free graphs are built undirected; afterwards
// floor(direct_fraction * pairs) pairs chosen uniformly keep one random direction.
// ER graphs are drawn directly as digraphs.
StateDigraph generate(const GenSpec& spec);

}  // namespace robsense
