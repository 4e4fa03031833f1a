#include <doctest.h>

#include "robsense/digraph.hpp"
#include "support.hpp"

using namespace robsense;

TEST_CASE("parse directed and undirected lines") {
  StateDigraph g = parse_edge_list("n 3\ne 1 2\ne 2 3");
  CHECK(g.n() == 3);
  CHECK(g.edges() == std::set<Edge>{{1, 2}, {2, 3}});
  CHECK(g.undirected_pairs().empty());

  StateDigraph h = parse_edge_list("n 2\nu 1 2");
  CHECK(h.edges() == std::set<Edge>{{1, 2}, {2, 1}});
  CHECK(h.undirected_pairs() == std::set<Edge>{{1, 2}});
  CHECK(h.is_undirected_pair(2, 1));
}

TEST_CASE("parse errors carry the line number") {
  auto line_of = [](const std::string& text) {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("n 2\ne 1 3") == 2);
  CHECK(line_of("n 2\ne 1 2\ne 1 2") == 3);
  CHECK(line_of("n 2\n\ne 1") == 3);
  CHECK(line_of("e 1 2") == 1);
  CHECK(line_of("n 2\nx 1 2") == 2);
  CHECK(line_of("n two") == 1);
  CHECK(line_of("# nothing") == 1);
  CHECK(line_of("n 2\nu 1 1") == 2);
  CHECK(line_of("n 2\ne 1 2\nu 1 2") == 3);
}

TEST_CASE("comments and blank lines are ignored") {
  StateDigraph g = parse_edge_list("# fixture: x\n\nn 2  # header\ne 2 1 # edge\n");
  CHECK(g.edges() == std::set<Edge>{{2, 1}});
}

TEST_CASE("structural matrix is transposed") {
  // Entry [j][i] nonzero gives edge i -> j.
  StateDigraph g = from_structural_matrix({{0, 1}, {0, 0}});
  CHECK(g.edges() == std::set<Edge>{{2, 1}});
  CHECK_THROWS_AS(from_structural_matrix({{0, 1}, {0}}), std::invalid_argument);
}

TEST_CASE("link removal") {
  StateDigraph g = parse_edge_list("n 3\nu 1 2\ne 2 3");
  StateDigraph a = g.without_link({1, 2}, true);
  CHECK(a.edges() == std::set<Edge>{{2, 3}});
  CHECK(a.undirected_pairs().empty());
  StateDigraph b = g.without_link({1, 2});
  CHECK(b.edges() == std::set<Edge>{{2, 1}, {2, 3}});
  CHECK(b.undirected_pairs().empty());
  CHECK_THROWS(g.without_link({3, 2}));
  CHECK_THROWS(g.without_link({2, 3}, true));
  CHECK(remove_link(g, {2, 3}) == g.without_link({2, 3}));
}

TEST_CASE("serialize round-trips") {
  SplitMix64 rng(7);
  for (int t = 0; t < 200; ++t) {
    int n = 1 + static_cast<int>(rng.below(12));
    StateDigraph g = testing::random_mixed(rng, n, 0.3, 0.4);
    if (rng.below(2)) {
      int u = 1 + static_cast<int>(rng.below(n));
      if (!g.has_edge(u, u)) g.add_edge(u, u);
    }
    CHECK(parse_edge_list(serialize(g)) == g);
  }
}

TEST_CASE("loading a missing file fails") { CHECK_THROWS(load_sdg("/nonexistent/none.sdg")); }

namespace {

std::vector<std::vector<char>> closure(const StateDigraph& g) {
  int n = g.n();
  std::vector<std::vector<char>> r(n + 1, std::vector<char>(n + 1, 0));
  for (int v = 1; v <= n; ++v) r[v][v] = 1;
  for (auto [u, v] : g.edges()) r[u][v] = 1;
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= n; ++i)
      if (r[i][k])
        for (int j = 1; j <= n; ++j)
          if (r[k][j]) r[i][j] = 1;
  return r;
}

}  // namespace

TEST_CASE("SCCs agree with the transitive closure") {
  SplitMix64 rng(11);
  for (int t = 0; t < 300; ++t) {
    int n = 1 + static_cast<int>(rng.below(15));
    StateDigraph g = testing::random_digraph(rng, n, 0.05 + 0.3 * rng.uniform());
    SccDecomposition d = scc_decompose(g);
    auto r = closure(g);
    for (int u = 1; u <= n; ++u)
      for (int v = 1; v <= n; ++v)
        CHECK((d.component_of[u] == d.component_of[v]) == (r[u][v] && r[v][u]));
    // Sinks: nothing outside the component is reachable.
    for (int u = 1; u <= n; ++u) {
      bool sink = true;
      for (int v = 1; v <= n; ++v)
        if (r[u][v] && d.component_of[v] != d.component_of[u]) sink = false;
      CHECK(d.in_sink(u) == sink);
    }
    // Components are sorted, ordered by smallest member, and partition 1..n.
    std::size_t total = 0;
    for (std::size_t c = 0; c < d.components.size(); ++c) {
      CHECK(std::is_sorted(d.components[c].begin(), d.components[c].end()));
      if (c) CHECK(d.components[c - 1].front() < d.components[c].front());
      total += d.components[c].size();
    }
    CHECK(total == static_cast<std::size_t>(n));
    for (auto [a, b] : d.dag_edges) CHECK(!(r[d.components[b][0]][d.components[a][0]]));
  }
}

TEST_CASE("empty digraph") {
  StateDigraph g(0);
  SccDecomposition d = scc_decompose(g);
  CHECK(d.components.empty());
  CHECK(serialize(g) == "n 0\n");
}
