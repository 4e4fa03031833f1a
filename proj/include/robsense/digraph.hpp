#pragma once

#include <istream>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace robsense {

using Edge = std::pair<int, int>;
using VertexSet = std::set<int>;

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// State digraph over vertices 1..n. An edge (u, v) means x_u influences x_v.
class StateDigraph {
 public:
  StateDigraph() = default;
  explicit StateDigraph(int n);

  int n() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::set<Edge>& edges() const { return edges_; }
  // Unordered pairs stored as (min, max).
  const std::set<Edge>& undirected_pairs() const { return pairs_; }

  // Throws std::invalid_argument on out-of-range endpoints or duplicates.
  void add_edge(int u, int v);
  void add_undirected(int a, int b);

  bool has_edge(int u, int v) const { return edges_.count({u, v}) > 0; }
  bool is_undirected_pair(int a, int b) const;
  const std::vector<int>& out(int v) const { return out_[v]; }
  const std::vector<int>& in(int v) const { return in_[v]; }

  // Copy with one directed edge removed, or both directions of a pair.
  StateDigraph without_link(Edge link, bool undirected = false) const;

  bool operator==(const StateDigraph& o) const {
    return n_ == o.n_ && edges_ == o.edges_ && pairs_ == o.pairs_;
  }

 private:
  void erase_edge(int u, int v);

  int n_ = 0;
  std::set<Edge> edges_;
  std::set<Edge> pairs_;
  std::vector<std::vector<int>> out_{1};
  std::vector<std::vector<int>> in_{1};
};

StateDigraph parse_edge_list(std::istream& in);
StateDigraph parse_edge_list(const std::string& text);
StateDigraph load_sdg(const std::string& path);
std::string serialize(const StateDigraph& g);

// pattern[j][i] != 0 yields edge (i+1, j+1).
StateDigraph from_structural_matrix(const std::vector<std::vector<int>>& pattern);

StateDigraph remove_link(const StateDigraph& g, Edge link, bool undirected = false);

struct SccDecomposition {
  std::vector<int> component_of;          // indexed by vertex, 1..n
  std::vector<std::vector<int>> components;  // sorted vertex lists, ordered by smallest member
  std::set<std::pair<int, int>> dag_edges;
  std::vector<int> sinks;                 // component ids, ascending

  bool is_sink_component(int c) const;
  bool in_sink(int v) const { return is_sink_component(component_of[v]); }
  std::vector<std::vector<int>> sink_sets() const;
};

SccDecomposition scc_decompose(const StateDigraph& g);

}  // namespace robsense
