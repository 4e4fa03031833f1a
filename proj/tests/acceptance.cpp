// One line per acceptance criterion: "[PASS] n. title (details)" or "[FAIL] ...".
// Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>

#include "robsense/lrobust.hpp"
#include "robsense/oracle.hpp"
#include "robsense/report.hpp"
#include "robsense/rng.hpp"
#include "robsense/srobust.hpp"

using namespace robsense;

namespace {

// Tolerances and sample sizes.
constexpr double kFigureBudgetMs = 1000.0;
constexpr int kOracleTrials = 1000;
constexpr double kOracleBudgetMs = 60000.0;
constexpr int kRobustTrials = 200;
constexpr int kMinimalityTrials = 200;
constexpr int kCoverTrials = 500;
constexpr int kGadgetTrials = 100;
constexpr int kUndirectedTrials = 100;
constexpr double kExponentLow = 2.0;
constexpr double kExponentHigh = 5.0;
constexpr double kOrdersBelowBound = 6.0;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

StateDigraph fixture(const std::string& name) {
  return load_sdg(std::string(ROBSENSE_FIXTURE_DIR) + "/" + name + ".sdg");
}

std::string show(const VertexSet& s) {
  std::string r = "{";
  for (int v : s) r += (r.size() > 1 ? "," : "") + std::to_string(v);
  return r + "}";
}

std::string show(const std::vector<std::vector<int>>& family) {
  std::string r = "{";
  for (const auto& c : family) r += (r.size() > 1 ? "," : "") + show(VertexSet(c.begin(), c.end()));
  return r + "}";
}

struct Verdict {
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

int failures = 0;

void report(int id, const std::string& title, const Verdict& v) {
  if (!v.ok) ++failures;
  std::cout << (v.ok ? "[PASS] " : "[FAIL] ") << id << ". " << title;
  if (!v.notes.empty()) {
    std::cout << " (";
    for (std::size_t i = 0; i < v.notes.size(); ++i) std::cout << (i ? "; " : "") << v.notes[i];
    std::cout << ")";
  }
  std::cout << std::endl;
}

StateDigraph random_digraph(SplitMix64& rng, int n, double p, bool loops) {
  StateDigraph g(n);
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v)
      if ((loops || u != v) && rng.uniform() < p) g.add_edge(u, v);
  return g;
}

VertexSet random_subset(SplitMix64& rng, int n, double p) {
  VertexSet s;
  for (int v = 1; v <= n; ++v)
    if (rng.uniform() < p) s.insert(v);
  return s;
}

// Feasible under both the structural test and the numeric oracle.
bool doubly_feasible(const StateDigraph& g, const VertexSet& f, std::uint64_t seed) {
  return is_feasible(g, f) && numeric_observable(g, f, seed);
}

void criterion1() {
  Verdict v;
  auto t0 = Clock::now();
  StateDigraph g = fixture("fig5");
  FeasibleSolution f = minimal_feasible(g);
  v.expect(f.all() == VertexSet{8, 10}, "place gave " + show(f.all()));

  SRobustResult s = srobust_solution(g, CoverMode::Exact, f);
  const std::vector<std::vector<std::vector<int>>> omega_want{{{1}}, {{1}, {4}}};
  v.expect(s.omega.per_index == omega_want,
           "Omega^1 = " + show(s.omega.per_index.at(0)) + ", Omega^2 = " + show(s.omega.per_index.at(1)) +
               ", expected {{1}} and {{1},{4}}");
  auto cover_of = [&](long long j) {
    auto it = s.cover.instance.sets.find(j);
    return it == s.cover.instance.sets.end() ? VertexSet{} : VertexSet(it->second.begin(), it->second.end());
  };
  v.expect(cover_of(1) == VertexSet{1, 2}, "V_1 = " + show(cover_of(1)));
  v.expect(cover_of(4) == VertexSet{1}, "V_4 = " + show(cover_of(4)) + ", expected {1}");
  v.expect(s.solution == VertexSet{1, 8, 10}, "s-robust " + show(s.solution));

  LRobustResult l = lrobust_solution(g, CoverMode::Exact, false, f.all());
  std::set<Edge> links;
  for (const auto& x : l.links) links.insert(x.link);
  v.expect(links == std::set<Edge>{{1, 5}, {5, 7}, {6, 2}, {7, 10}, {3, 1}},
           std::to_string(links.size()) + " sensitive links");
  v.expect(l.solution == VertexSet{1, 3, 5, 6, 8, 10}, "l-robust " + show(l.solution));
  double ms = ms_since(t0);
  v.expect(ms < kFigureBudgetMs, "took " + std::to_string(ms) + " ms");
  report(1, "ten-state fixture end-to-end (fig5)", v);
}

void criterion2() {
  Verdict v;
  StateDigraph g1 = fixture("fig1");
  VertexSet f1{1, 5, 8}, f2{2, 6, 9};
  for (int t : f1) {
    auto alt = tip_alternatives(g1, f1, t);
    v.expect(alt == std::vector<int>{2, 6, 9}, "alternatives of tip " + std::to_string(t));
  }
  auto size1 = srobust_solution(g1, CoverMode::Exact, seed_from_tips(g1, f1)).solution.size();
  auto size2 = srobust_solution(g1, CoverMode::Exact, seed_from_tips(g1, f2)).solution.size();
  v.expect(size1 == 4, "seed F1 gave size " + std::to_string(size1));
  v.expect(size2 == 5, "seed F2 gave size " + std::to_string(size2));

  StateDigraph g2 = fixture("fig2");
  auto pairs = [](const std::vector<SensitiveLink>& ls) {
    std::vector<Edge> r;
    for (const auto& l : ls) r.push_back(l.link);
    return r;
  };
  v.expect(pairs(sensitive_links(g2, {1, 3})) == std::vector<Edge>{{4, 2}, {5, 1}}, "fig2 seed {1,3}");
  v.expect(pairs(sensitive_links(g2, {4, 5})) == std::vector<Edge>{{1, 5}, {3, 2}}, "fig2 seed {4,5}");

  StateDigraph g4 = fixture("fig4");
  v.expect(sensitive_links(g4, {1, 6}).empty(), "fig4 seed {1,6} has sensitive links");
  auto ls = sensitive_links(g4, {3, 4});
  auto fam = completion_family(g4, {3, 4}, ls).per_link;
  std::sort(fam.begin(), fam.end());
  v.expect(fam == std::vector<std::vector<std::vector<int>>>{{{1}}, {{6}}}, "fig4 seed {3,4} back-ups");
  report(2, "fig1, fig2 and fig4 fixtures", v);
}

void criterion3() {
  Verdict v;
  auto t0 = Clock::now();
  SplitMix64 rng(20240601);
  int disagree = 0;
  for (int t = 0; t < kOracleTrials; ++t) {
    int n = 1 + static_cast<int>(rng.below(10));
    StateDigraph g = random_digraph(rng, n, 0.05 + 0.35 * rng.uniform(), true);
    VertexSet f = random_subset(rng, n, 0.1 + 0.5 * rng.uniform());
    if (is_feasible(g, f) != numeric_observable(g, f, rng.next())) ++disagree;
  }
  double ms = ms_since(t0);
  v.expect(disagree == 0, std::to_string(disagree) + " disagreements");
  v.expect(ms < kOracleBudgetMs, "took " + std::to_string(ms) + " ms");
  v.note(std::to_string(kOracleTrials) + " trials");
  report(3, "Oracle equivalence", v);
}

void criterion4() {
  Verdict v;
  SplitMix64 rng(4242);
  int s_checked = 0, l_checked = 0, s_bad = 0, l_bad = 0, drawn = 0;
  // Many digraphs admit no s-robust extension; keep drawing until both counts are reached.
  for (int t = 0; (s_checked < kRobustTrials || l_checked < kRobustTrials) && t < 20 * kRobustTrials; ++t) {
    ++drawn;
    StateDigraph g;
    if (t % 2 == 0) {
      GenSpec spec;
      spec.model = Model::ScaleFree;
      spec.n = 5 + static_cast<int>(rng.below(21));
      spec.d = 1 + static_cast<int>(rng.below(3));
      spec.direct_fraction = 0.1 + 0.4 * rng.uniform();
      spec.seed = rng.next();
      g = generate(spec);
    } else {
      int n = 2 + static_cast<int>(rng.below(24));
      g = random_digraph(rng, n, (1.0 + 2.0 * rng.uniform()) / n, false);
    }
    const std::uint64_t seed = rng.next();
    CoverMode mode = t % 4 < 2 ? CoverMode::Greedy : CoverMode::Exact;
    try {
      SRobustResult s = srobust_solution(g, mode);
      ++s_checked;
      bool ok = doubly_feasible(g, s.solution, seed);
      for (int x : s.solution) {
        VertexSet rest = s.solution;
        rest.erase(x);
        ok = ok && doubly_feasible(g, rest, seed + x);
      }
      if (!ok) ++s_bad;
    } catch (const Uncoverable&) {
    }
    LRobustResult l = lrobust_solution(g, mode);
    ++l_checked;
    bool ok = doubly_feasible(g, l.solution, seed);
    for (const Edge& e : g.edges()) ok = ok && doubly_feasible(g.without_link(e), l.solution, seed ^ e.first);
    if (!ok) ++l_bad;
  }
  v.expect(s_bad == 0, std::to_string(s_bad) + " s-robust failures");
  v.expect(l_bad == 0, std::to_string(l_bad) + " l-robust failures");
  v.expect(s_checked >= kRobustTrials && l_checked >= kRobustTrials, "too few solutions returned");
  v.note(std::to_string(s_checked) + " s-robust and " + std::to_string(l_checked) +
         " l-robust solutions checked over " + std::to_string(drawn) + " digraphs");
  report(4, "Robustness property suite", v);
}

void criterion5() {
  Verdict v;
  SplitMix64 rng(555);
  int s_cmp = 0, s_bad = 0, l_bad = 0;
  for (int t = 0; t < kMinimalityTrials; ++t) {
    int n = 1 + static_cast<int>(rng.below(8));
    StateDigraph g = random_digraph(rng, n, 0.1 + 0.4 * rng.uniform(), true);
    FeasibleSolution seed = minimal_feasible(g);
    auto best_s = exhaustive_srobust(g, 8, seed.all());
    try {
      SRobustResult s = srobust_solution(g, CoverMode::Exact, seed);
      ++s_cmp;
      if (!best_s || best_s->size() != s.solution.size()) ++s_bad;
    } catch (const Uncoverable&) {
      if (best_s) ++s_bad;
    }
    LRobustResult l = lrobust_solution(g, CoverMode::Exact, false, seed.all());
    auto best_l = exhaustive_lrobust(g, 8, seed.all());
    if (!best_l || best_l->size() != l.solution.size()) ++l_bad;
  }
  v.expect(s_bad == 0, std::to_string(s_bad) + " s-robust size mismatches");
  v.expect(l_bad == 0, std::to_string(l_bad) + " l-robust size mismatches");
  v.note(std::to_string(kMinimalityTrials) + " instances, " + std::to_string(s_cmp) + " with an s-robust extension");
  report(5, "Conditional minimality", v);
}

void criterion6() {
  Verdict v;
  std::vector<CoverInstance> pool;
  // Fixture-derived instances.
  for (const char* name : {"fig1", "fig2", "fig3", "fig4", "fig5", "fig8_p2k2", "fig9_p2k2"}) {
    StateDigraph g = fixture(name);
    FeasibleSolution f = minimal_feasible(g);
    try {
      pool.push_back(build_sensor_cover(g.n(), backup_family(g, f)).instance);
    } catch (const std::exception&) {
    }
    auto ls = sensitive_links(g, f.all());
    pool.push_back(build_link_cover(g.n(), completion_family(g, f.all(), ls)).instance);
  }
  StateDigraph g1 = fixture("fig1");
  pool.push_back(build_sensor_cover(g1.n(), backup_family(g1, seed_from_tips(g1, {2, 6, 9}))).instance);
  const std::size_t fixture_count = pool.size();

  SplitMix64 rng(666);
  for (int t = 0; t < kCoverTrials; ++t) {
    CoverInstance inst;
    int u = 1 + static_cast<int>(rng.below(12));
    for (int e = 1; e <= u; ++e) inst.universe.push_back(e);
    int k = 1 + static_cast<int>(rng.below(12));
    for (int s = 1; s <= k; ++s) {
      std::vector<int> elems;
      for (int e = 1; e <= u; ++e)
        if (rng.uniform() < 0.3) elems.push_back(e);
      if (elems.empty()) elems.push_back(1 + static_cast<int>(rng.below(u)));
      inst.add_set(s, elems, Rational(1 + static_cast<long long>(rng.below(5)), 1 + static_cast<long long>(rng.below(3))));
    }
    for (int e = 1; e <= u; ++e) inst.add_set(100 + e, {e}, Rational(2 + static_cast<long long>(rng.below(4))));
    pool.push_back(inst);
  }

  int violations = 0, skipped = 0, uncoverable = 0;
  for (const auto& inst : pool) {
    if (inst.universe.size() > 12) {
      ++skipped;
      continue;
    }
    CoverSolution g, x;
    try {
      g = greedy_cover(inst);
      x = exact_cover(inst);
    } catch (const Uncoverable&) {
      ++uncoverable;
      continue;
    }
    if (g.total_cost > harmonic(static_cast<int>(inst.max_set_size())) * x.total_cost) ++violations;
  }
  v.expect(violations == 0, std::to_string(violations) + " violations");
  v.note(std::to_string(pool.size() - fixture_count) + " random + " + std::to_string(fixture_count) +
         " fixture instances, " + std::to_string(skipped) + " above 12 elements and " +
         std::to_string(uncoverable) + " uncoverable skipped");
  report(6, "Greedy guarantee", v);
}

SetSystem random_system(SplitMix64& rng) {
  SetSystem s;
  s.p = 1 + static_cast<int>(rng.below(5));
  int k = 1 + static_cast<int>(rng.below(4));
  for (int j = 0; j < k; ++j) {
    std::vector<int> c;
    for (int e = 1; e <= s.p; ++e)
      if (rng.uniform() < 0.45) c.push_back(e);
    if (c.empty()) c.push_back(1 + static_cast<int>(rng.below(s.p)));
    s.sets.push_back(c);
  }
  for (int e = 1; e <= s.p; ++e) {
    bool hit = false;
    for (const auto& c : s.sets) hit |= std::find(c.begin(), c.end(), e) != c.end();
    if (!hit) s.sets[rng.below(k)].push_back(e);
  }
  for (auto& c : s.sets) std::sort(c.begin(), c.end());
  return s;
}

// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= x.size();
  my /= y.size();
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (std::log(x[i]) - mx) * (std::log(y[i]) - my);
    sxx += (std::log(x[i]) - mx) * (std::log(x[i]) - mx);
  }
  return sxy / sxx;
}

void criterion7() {
  Verdict v;
  SplitMix64 rng(777);
  int s_bad = 0, l_bad = 0, s_none = 0;
  std::ostringstream s_example, l_example;
  for (int t = 0; t < kGadgetTrials; ++t) {
    SetSystem sys = random_system(rng);
    const int cover = min_cover_size(sys);
    const int p = sys.p, k = static_cast<int>(sys.sets.size());

    StateDigraph gs = sensor_gadget(sys);
    auto rs = exhaustive_srobust(gs, gs.n());
    if (!rs) {
      ++s_none;
      ++s_bad;
    } else if (static_cast<int>(rs->size()) - 2 != cover) {
      if (s_bad++ == 0) s_example << "p=" << p << " k=" << k << ": |robust|-2=" << rs->size() - 2 << " vs cover " << cover;
    }

    // Both tail sinks are singletons, so every feasible set contains the pair.
    StateDigraph gl = link_gadget(sys);
    const VertexSet pair{p + 2 * k + 1, p + 2 * k + 2};
    auto rl = exhaustive_lrobust(gl, gl.n(), pair);
    int added = rl ? static_cast<int>(rl->size()) - 2 : -1;
    if (added != cover && l_bad++ == 0)
      l_example << "p=" << p << " k=" << k << ": added " << added << " vs cover " << cover;
  }
  v.expect(s_bad == 0, "sensor identity off in " + std::to_string(s_bad) + "/" + std::to_string(kGadgetTrials) +
                           (s_example.str().empty() ? "" : ", e.g. " + s_example.str()));
  v.expect(l_bad == 0, "link identity off in " + std::to_string(l_bad) + "/" + std::to_string(kGadgetTrials) +
                           (l_example.str().empty() ? "" : ", e.g. " + l_example.str()));

  BenchSpec b;
  b.base.model = Model::ScaleFree;
  b.base.d = 1;
  b.base.seed = 2024;
  b.n_list = {50, 100, 200, 300};
  b.trials = 3;
  auto med = bench_medians(run_bench(b));
  std::vector<double> ns, ds, dl;
  for (const auto& r : med) {
    ns.push_back(r.n);
    ds.push_back(static_cast<double>(std::max<std::uint64_t>(r.d_s, 1)));
    dl.push_back(static_cast<double>(std::max<std::uint64_t>(r.d_l, 1)));
  }
  double es = loglog_slope(ns, ds), el = loglog_slope(ns, dl);
  std::ostringstream fit;
  fit.precision(3);
  fit << "D_s exponent " << es << ", D_l exponent " << el;
  const bool in_range = es >= kExponentLow && es <= kExponentHigh && el >= kExponentLow && el <= kExponentHigh;
  v.expect(in_range, fit.str());
  if (in_range) v.note(fit.str());
  const double bound = enumeration_bound_sensor(50);
  const double gap = std::log10(bound) - std::log10(std::max(ds[0], dl[0]));
  std::ostringstream gs;
  gs.precision(3);
  gs << "n=50 gap " << gap << " orders";
  v.expect(gap >= kOrdersBelowBound, gs.str());
  if (gap >= kOrdersBelowBound) v.note(gs.str());
  report(7, "Hardness gadgets and counter scaling", v);
}

void criterion8() {
  Verdict v;
  SplitMix64 rng(888);
  int bad = 0;
  for (int t = 0; t < kUndirectedTrials; ++t) {
    int n = 2 + static_cast<int>(rng.below(14));
    StateDigraph g(n);
    double p = (1.5 + 2.0 * rng.uniform()) / n;
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        if (rng.uniform() < p) {
          if (rng.uniform() < 0.85)
            g.add_undirected(a, b);
          else if (rng.below(2))
            g.add_edge(a, b);
          else
            g.add_edge(b, a);
        }
    LRobustResult l = lrobust_solution(g, t % 2 ? CoverMode::Exact : CoverMode::Greedy, true);
    bool ok = is_feasible(g, l.solution);
    for (const auto& [e, joint] : failure_units(g, true)) ok = ok && is_feasible(g.without_link(e, joint), l.solution);
    if (!ok) ++bad;
  }
  v.expect(bad == 0, std::to_string(bad) + " failures");
  v.note(std::to_string(kUndirectedTrials) + " instances");
  report(8, "Undirected mode", v);
}

}  // namespace

int main() {
  std::vector<std::function<void()>> all{criterion1, criterion2, criterion3, criterion4,
                                         criterion5, criterion6, criterion7, criterion8};
  for (std::size_t i = 0; i < all.size(); ++i) {
    try {
      all[i]();
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "[FAIL] " << i + 1 << ". aborted: " << e.what() << std::endl;
    }
  }
  std::cout << (8 - failures) << "/8 criteria passed" << std::endl;
  return failures;
}
