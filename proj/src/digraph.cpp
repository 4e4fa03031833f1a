#include "robsense/digraph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace robsense {

namespace {

void sorted_insert(std::vector<int>& v, int x) {
  v.insert(std::lower_bound(v.begin(), v.end(), x), x);
}

void sorted_erase(std::vector<int>& v, int x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it != v.end() && *it == x) v.erase(it);
}

int parse_index(const std::string& tok, int line) {
  std::size_t pos = 0;
  long long val = 0;
  try {
    val = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, "expected integer, got '" + tok + "'");
  }
  if (pos != tok.size()) throw ParseError(line, "expected integer, got '" + tok + "'");
  if (val < 0 || val > 100000000) throw ParseError(line, "value out of range: " + tok);
  return static_cast<int>(val);
}

}  // namespace

StateDigraph::StateDigraph(int n) : n_(n), out_(n + 1), in_(n + 1) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

void StateDigraph::add_edge(int u, int v) {
  if (u < 1 || u > n_ || v < 1 || v > n_)
    throw std::invalid_argument("vertex index out of range: (" + std::to_string(u) + "," +
                                std::to_string(v) + ")");
  if (!edges_.insert({u, v}).second)
    throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," +
                                std::to_string(v) + ")");
  sorted_insert(out_[u], v);
  sorted_insert(in_[v], u);
}

void StateDigraph::add_undirected(int a, int b) {
  if (a == b) throw std::invalid_argument("undirected link needs two distinct vertices");
  add_edge(a, b);
  add_edge(b, a);
  pairs_.insert({std::min(a, b), std::max(a, b)});
}

bool StateDigraph::is_undirected_pair(int a, int b) const {
  return pairs_.count({std::min(a, b), std::max(a, b)}) > 0;
}

void StateDigraph::erase_edge(int u, int v) {
  if (edges_.erase({u, v}) == 0)
    throw std::invalid_argument("link (" + std::to_string(u) + "," + std::to_string(v) +
                                ") not present");
  sorted_erase(out_[u], v);
  sorted_erase(in_[v], u);
}

StateDigraph StateDigraph::without_link(Edge link, bool undirected) const {
  StateDigraph g = *this;
  auto [u, v] = link;
  if (undirected) {
    Edge key{std::min(u, v), std::max(u, v)};
    if (!pairs_.count(key))
      throw std::invalid_argument("no undirected link {" + std::to_string(u) + "," +
                                  std::to_string(v) + "}");
    g.pairs_.erase(key);
    g.erase_edge(u, v);
    g.erase_edge(v, u);
  } else {
    g.erase_edge(u, v);
    // A pair that lost one direction is no longer bidirectional.
    g.pairs_.erase({std::min(u, v), std::max(u, v)});
  }
  return g;
}

StateDigraph remove_link(const StateDigraph& g, Edge link, bool undirected) {
  return g.without_link(link, undirected);
}

StateDigraph parse_edge_list(std::istream& in) {
  std::string raw;
  int line = 0;
  bool have_header = false;
  StateDigraph g;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    std::vector<std::string> tok;
    for (std::string t; ss >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string& kind = tok[0];
    if (kind == "n") {
      if (have_header) throw ParseError(line, "duplicate header");
      if (tok.size() != 2) throw ParseError(line, "header must be 'n <count>'");
      g = StateDigraph(parse_index(tok[1], line));
      have_header = true;
    } else if (kind == "e" || kind == "u") {
      if (!have_header) throw ParseError(line, "edge before header");
      if (tok.size() != 3) throw ParseError(line, "expected two vertex indices");
      int a = parse_index(tok[1], line);
      int b = parse_index(tok[2], line);
      try {
        if (kind == "e")
          g.add_edge(a, b);
        else
          g.add_undirected(a, b);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line, e.what());
      }
    } else {
      throw ParseError(line, "unknown record '" + kind + "'");
    }
  }
  if (!have_header) throw ParseError(line, "missing header 'n <count>'");
  return g;
}

StateDigraph parse_edge_list(const std::string& text) {
  std::istringstream ss(text);
  return parse_edge_list(ss);
}

StateDigraph load_sdg(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return parse_edge_list(f);
}

std::string serialize(const StateDigraph& g) {
  std::ostringstream os;
  os << "n " << g.n() << "\n";
  for (auto [u, v] : g.edges()) {
    if (g.is_undirected_pair(u, v)) continue;
    os << "e " << u << " " << v << "\n";
  }
  for (auto [a, b] : g.undirected_pairs()) os << "u " << a << " " << b << "\n";
  return os.str();
}

StateDigraph from_structural_matrix(const std::vector<std::vector<int>>& pattern) {
  const int n = static_cast<int>(pattern.size());
  for (const auto& row : pattern)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("pattern is not square");
  StateDigraph g(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (pattern[j][i] != 0) g.add_edge(i + 1, j + 1);
  return g;
}

bool SccDecomposition::is_sink_component(int c) const {
  return std::binary_search(sinks.begin(), sinks.end(), c);
}

std::vector<std::vector<int>> SccDecomposition::sink_sets() const {
  std::vector<std::vector<int>> out;
  for (int c : sinks) out.push_back(components[c]);
  return out;
}

SccDecomposition scc_decompose(const StateDigraph& g) {
  const int n = g.n();
  // Iterative Tarjan.
  std::vector<int> index(n + 1, -1), low(n + 1, 0), raw_comp(n + 1, -1);
  std::vector<char> on_stack(n + 1, 0);
  std::vector<int> stack;
  std::vector<std::pair<int, std::size_t>> call;
  int counter = 0, ncomp = 0;
  for (int s = 1; s <= n; ++s) {
    if (index[s] != -1) continue;
    call.push_back({s, 0});
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      if (pos == 0) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = 1;
      }
      const auto& nb = g.out(v);
      bool descended = false;
      while (pos < nb.size()) {
        int w = nb[pos++];
        if (index[w] == -1) {
          call.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) low[v] = std::min(low[v], index[w]);
      }
      if (descended) continue;
      int done = v;
      if (low[done] == index[done]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          raw_comp[w] = ncomp;
        } while (w != done);
        ++ncomp;
      }
      call.pop_back();
      if (!call.empty()) {
        int parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }

  // Renumber components by smallest member.
  std::vector<int> remap(ncomp, -1);
  SccDecomposition d;
  d.component_of.assign(n + 1, -1);
  for (int v = 1; v <= n; ++v) {
    int rc = raw_comp[v];
    if (remap[rc] == -1) {
      remap[rc] = static_cast<int>(d.components.size());
      d.components.emplace_back();
    }
    d.component_of[v] = remap[rc];
    d.components[remap[rc]].push_back(v);
  }
  std::vector<char> has_out(d.components.size(), 0);
  for (auto [u, v] : g.edges()) {
    int cu = d.component_of[u], cv = d.component_of[v];
    if (cu != cv) {
      d.dag_edges.insert({cu, cv});
      has_out[cu] = 1;
    }
  }
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c)
    if (!has_out[c]) d.sinks.push_back(c);
  return d;
}

}  // namespace robsense
