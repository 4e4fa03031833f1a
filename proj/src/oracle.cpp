#include "robsense/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "robsense/lrobust.hpp"
#include "robsense/pnc.hpp"
#include "robsense/rng.hpp"

namespace robsense {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 addm(u64 a, u64 b) {
  u64 s = a + b;
  return s >= kFieldPrime ? s - kFieldPrime : s;
}
u64 subm(u64 a, u64 b) { return a >= b ? a - b : a + kFieldPrime - b; }
u64 mulm(u64 a, u64 b) {
  u128 p = static_cast<u128>(a) * b;
  u64 lo = static_cast<u64>(p & kFieldPrime);
  u64 hi = static_cast<u64>(p >> 61);
  return addm(lo, hi);
}
u64 powm(u64 a, u64 e) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulm(r, a);
    a = mulm(a, a);
    e >>= 1;
  }
  return r;
}
u64 invm(u64 a) { return powm(a, kFieldPrime - 2); }

// Incremental row-echelon basis over F_q.
struct Echelon {
  int n;
  std::vector<std::vector<u64>> rows;
  std::vector<int> pivot;

  explicit Echelon(int cols) : n(cols) {}

  bool add(std::vector<u64> r) {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      u64 c = r[pivot[k]];
      if (c == 0) continue;
      for (int j = 0; j < n; ++j)
        if (rows[k][j]) r[j] = subm(r[j], mulm(c, rows[k][j]));
    }
    int p = -1;
    for (int j = 0; j < n; ++j)
      if (r[j]) {
        p = j;
        break;
      }
    if (p < 0) return false;
    u64 inv = invm(r[p]);
    for (int j = 0; j < n; ++j) r[j] = mulm(r[j], inv);
    rows.push_back(std::move(r));
    pivot.push_back(p);
    return true;
  }
};

}  // namespace

int realization_rank(const StateDigraph& g, const VertexSet& f, u64 seed) {
  const int n = g.n();
  if (n == 0) return 0;
  SplitMix64 rng(seed);
  // a[j][i] is the weight of edge (i, j): row j of the realized state matrix.
  std::vector<std::vector<u64>> a(n, std::vector<u64>(n, 0));
  for (auto [u, v] : g.edges()) a[v - 1][u - 1] = 1 + rng.below(kFieldPrime - 1);

  Echelon basis(n);
  for (int s : f) {
    if (s < 1 || s > n) continue;
    std::vector<u64> row(n, 0);
    row[s - 1] = 1;
    for (int k = 0; k < n && static_cast<int>(basis.rows.size()) < n; ++k) {
      basis.add(row);
      std::vector<u64> next(n, 0);
      for (int j = 0; j < n; ++j) {
        if (!row[j]) continue;
        for (int i = 0; i < n; ++i)
          if (a[j][i]) next[i] = addm(next[i], mulm(row[j], a[j][i]));
      }
      row = std::move(next);
    }
  }
  return static_cast<int>(basis.rows.size());
}

bool numeric_observable(const StateDigraph& g, const VertexSet& f, u64 seed) {
  SplitMix64 seeds(seed);
  int votes = 0;
  for (int t = 0; t < 3; ++t)
    if (realization_rank(g, f, seeds.next()) == g.n()) ++votes;
  return votes >= 2;
}

namespace {

using Monomial = std::vector<int>;  // exponent per edge variable
using Poly = std::map<Monomial, long long>;

Poly mul(const Poly& x, const Poly& y) {
  Poly out;
  for (const auto& [mx, cx] : x)
    for (const auto& [my, cy] : y) {
      Monomial m = mx;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += my[i];
      long long& c = out[m];
      c += cx * cy;
      if (c == 0) out.erase(m);
    }
  return out;
}

void add_into(Poly& acc, const Poly& x, long long sign) {
  for (const auto& [m, c] : x) {
    long long& d = acc[m];
    d += sign * c;
    if (d == 0) acc.erase(m);
  }
}

}  // namespace

bool symbolic_observable(const StateDigraph& g, const VertexSet& f) {
  const int n = g.n();
  if (n > 4) throw std::length_error("symbolic rank is limited to n <= 4");
  if (n == 0) return true;
  const int m = static_cast<int>(g.edge_count());
  std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n));
  int var = 0;
  for (auto [u, v] : g.edges()) {
    Monomial mono(m, 0);
    mono[var++] = 1;
    a[v - 1][u - 1][mono] = 1;
  }
  std::vector<std::vector<Poly>> rows;
  for (int s : f) {
    if (s < 1 || s > n) continue;
    std::vector<Poly> row(n);
    row[s - 1][Monomial(m, 0)] = 1;
    for (int k = 0; k < n; ++k) {
      rows.push_back(row);
      std::vector<Poly> next(n);
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
          if (!row[j].empty() && !a[j][i].empty()) add_into(next[i], mul(row[j], a[j][i]), 1);
      row = std::move(next);
    }
  }
  const int r = static_cast<int>(rows.size());
  if (r < n) return false;
  std::vector<int> perm(n);
  std::vector<int> pick(r, 0);
  std::fill(pick.end() - n, pick.end(), 1);
  // Any nonzero maximal minor certifies full generic rank.
  do {
    std::vector<int> sel;
    for (int i = 0; i < r; ++i)
      if (pick[i]) sel.push_back(i);
    for (int i = 0; i < n; ++i) perm[i] = i;
    Poly det;
    do {
      int inversions = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (perm[i] > perm[j]) ++inversions;
      Poly term;
      term[Monomial(m, 0)] = 1;
      for (int i = 0; i < n && !term.empty(); ++i) term = mul(term, rows[sel[i]][perm[i]]);
      add_into(det, term, inversions % 2 ? -1 : 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!det.empty()) return true;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return false;
}

bool is_sensor_robust(const StateDigraph& g, const VertexSet& f) {
  const SccDecomposition scc = scc_decompose(g);
  if (!is_feasible(g, scc, f)) return false;
  for (int x : f) {
    VertexSet rest = f;
    rest.erase(x);
    if (!is_feasible(g, scc, rest)) return false;
  }
  return true;
}

namespace {

// Size-then-lexicographic enumeration of base ∪ S over S ⊆ complement of base.
template <class Pred>
std::optional<VertexSet> first_superset(int n, const VertexSet& base, Pred pred) {
  std::vector<int> rest;
  for (int v = 1; v <= n; ++v)
    if (!base.count(v)) rest.push_back(v);
  const int r = static_cast<int>(rest.size());
  for (int k = 0; k <= r; ++k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      VertexSet cand = base;
      for (int i : idx) cand.insert(rest[i]);
      if (pred(cand)) return cand;
      int i = k - 1;
      while (i >= 0 && idx[i] == r - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

void check_limit(const StateDigraph& g, int limit) {
  if (g.n() > limit)
    throw std::length_error("exhaustive search limited to n <= " + std::to_string(limit));
}

}  // namespace

std::optional<VertexSet> exhaustive_srobust(const StateDigraph& g, int limit, const VertexSet& base) {
  check_limit(g, limit);
  return first_superset(g.n(), base, [&](const VertexSet& f) { return is_sensor_robust(g, f); });
}

std::optional<VertexSet> exhaustive_lrobust(const StateDigraph& g, int limit, const VertexSet& base,
                                            bool undirected) {
  check_limit(g, limit);
  std::vector<std::pair<StateDigraph, SccDecomposition>> corrupted;
  for (const auto& [e, joint] : failure_units(g, undirected)) {
    StateDigraph h = g.without_link(e, joint);
    SccDecomposition s = scc_decompose(h);
    corrupted.emplace_back(std::move(h), std::move(s));
  }
  const SccDecomposition scc = scc_decompose(g);
  return first_superset(g.n(), base, [&](const VertexSet& f) {
    if (!is_feasible(g, scc, f)) return false;
    for (const auto& [h, s] : corrupted)
      if (!is_feasible(h, s, f)) return false;
    return true;
  });
}

std::optional<VertexSet> exhaustive_feasible(const StateDigraph& g, int limit) {
  check_limit(g, limit);
  const SccDecomposition scc = scc_decompose(g);
  return first_superset(g.n(), {}, [&](const VertexSet& f) { return is_feasible(g, scc, f); });
}

void validate(const SetSystem& s) {
  if (s.p < 1) throw std::invalid_argument("empty universe");
  std::vector<char> hit(s.p + 1, 0);
  for (const auto& c : s.sets) {
    if (c.empty()) throw std::invalid_argument("empty set in the collection");
    for (int e : c) {
      if (e < 1 || e > s.p) throw std::invalid_argument("set element outside the universe");
      hit[e] = 1;
    }
  }
  for (int e = 1; e <= s.p; ++e)
    if (!hit[e]) throw std::invalid_argument("element " + std::to_string(e) + " is uncovered");
}

int min_cover_size(const SetSystem& s) {
  validate(s);
  const int k = static_cast<int>(s.sets.size());
  int best = k + 1;
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<char> hit(s.p + 1, 0);
    for (int j = 0; j < k; ++j)
      if (mask >> j & 1)
        for (int e : s.sets[j]) hit[e] = 1;
    if (std::all_of(hit.begin() + 1, hit.end(), [](char c) { return c != 0; }))
      best = std::min(best, __builtin_popcount(mask));
  }
  return best;
}

namespace {

// Collects matrix entries (row, col) and emits edge col -> row.
struct EntryList {
  int n;
  std::vector<std::pair<int, int>> entries;
  void set(int row, int col) { entries.push_back({row, col}); }
  StateDigraph digraph() const {
    StateDigraph g(n);
    for (auto [r, c] : entries)
      if (!g.has_edge(c, r)) g.add_edge(c, r);
    return g;
  }
};

}  // namespace

StateDigraph sensor_gadget(const SetSystem& s) {
  validate(s);
  const int p = s.p, k = static_cast<int>(s.sets.size());
  EntryList m{p + k + 4, {}};
  for (int j = 1; j <= k; ++j) {
    for (int i : s.sets[j - 1]) m.set(p + j, i);
    m.set(p + j, p + j);
    m.set(p + k + 2, p + j);
  }
  m.set(p + k + 2, p + k + 1);
  m.set(p + k + 1, p + k + 2);
  m.set(p + k + 3, p + k + 2);
  m.set(p + k + 2, p + k + 4);
  // Closes x_{p+k+3} into the sink component with x_{p+k+1} and x_{p+k+2};
  // without it the tail ends in the singleton sink {x_{p+k+3}}.
  m.set(p + k + 2, p + k + 3);
  return m.digraph();
}

StateDigraph link_gadget(const SetSystem& s) {
  validate(s);
  const int p = s.p, k = static_cast<int>(s.sets.size());
  EntryList m{p + 2 * k + 4, {}};
  for (int i = 1; i <= p; ++i) m.set(i, i);
  for (int j = 1; j <= k; ++j) {
    for (int i : s.sets[j - 1]) {
      m.set(p + j, i);
      m.set(p + k + j, i);
    }
    m.set(p + j, p + j);
    m.set(p + k + j, p + k + j);
    m.set(p + 2 * k + 2, p + j);
    m.set(p + 2 * k + 2, p + k + j);
  }
  m.set(p + 2 * k + 1, p + 2 * k + 3);
  m.set(p + 2 * k + 1, p + 2 * k + 4);
  m.set(p + 2 * k + 2, p + 2 * k + 3);
  m.set(p + 2 * k + 2, p + 2 * k + 4);
  return m.digraph();
}

}  // namespace robsense
