#include "robsense/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <sstream>

#include "robsense/rng.hpp"

namespace robsense {

json to_json(const VertexSet& s) { return json(std::vector<int>(s.begin(), s.end())); }

json to_json(const CoverInstance& inst) {
  json sets = json::array();
  for (const auto& [id, elems] : inst.sets)
    sets.push_back({{"id", id}, {"elements", elems}, {"cost", to_string(inst.costs.at(id))}});
  return {{"universe", inst.universe}, {"sets", sets}};
}

CoverInstance cover_from_json(const json& j) {
  CoverInstance inst;
  inst.universe = j.at("universe").get<std::vector<int>>();
  std::sort(inst.universe.begin(), inst.universe.end());
  for (const auto& s : j.at("sets"))
    inst.add_set(s.at("id").get<long long>(), s.at("elements").get<std::vector<int>>(),
                 rational_from_string(s.at("cost").get<std::string>()));
  return inst;
}

json to_json(const CoverSolution& sol) {
  return {{"chosen", sol.chosen}, {"total_cost", to_string(sol.total_cost)}, {"covered", sol.covered}};
}

json to_json(const FeasibleSolution& f) {
  return {{"tips", to_json(f.tips_part)}, {"sink_picks", to_json(f.sink_part)}, {"all", to_json(f.all())}};
}

namespace {

std::string mode_name(CoverMode m) { return m == CoverMode::Exact ? "exact" : "greedy"; }

json payload_json(const BackupCover& c) {
  json out = json::object();
  for (const auto& [id, vs] : c.payload) out[std::to_string(id)] = vs;
  return out;
}

}  // namespace

json to_json(const SRobustResult& r) {
  json omega = json::array();
  for (std::size_t i = 0; i < r.omega.per_index.size(); ++i)
    omega.push_back({{"index", i + 1},
                     {"member", r.omega.members[i]},
                     {"role", static_cast<int>(i) < r.omega.tip_count ? "tip" : "sink"},
                     {"backups", r.omega.per_index[i]}});
  return {{"seed", to_json(r.seed)},
          {"omega", omega},
          {"self_covered", r.omega.self_covered},
          {"cover", to_json(r.cover.instance)},
          {"cover_vertices", payload_json(r.cover)},
          {"chosen", to_json(r.choice)},
          {"solution", to_json(r.solution)},
          {"mode", mode_name(r.mode)}};
}

json to_json(const LRobustResult& r) {
  json links = json::array();
  json theta = json::array();
  for (std::size_t j = 0; j < r.links.size(); ++j) {
    const auto& l = r.links[j];
    links.push_back({l.link.first, l.link.second, to_string(l.kind)});
    theta.push_back({{"index", j + 1}, {"completions", r.theta.per_link[j]}});
  }
  return {{"seed", to_json(r.seed)},
          {"undirected", r.undirected},
          {"sensitive_links", links},
          {"theta", theta},
          {"cover", to_json(r.cover.instance)},
          {"cover_vertices", payload_json(r.cover)},
          {"chosen", to_json(r.choice)},
          {"solution", to_json(r.solution)},
          {"mode", mode_name(r.mode)}};
}

json to_json(const GenSpec& s) {
  json j = {{"model", model_name(s.model)},
            {"n", s.n},
            {"direct_fraction", s.direct_fraction},
            {"seed", s.seed},
            {"rng", "splitmix64"}};
  switch (s.model) {
    case Model::ER: j["prob"] = s.prob; break;
    case Model::SmallWorld:
      j["ring_degree"] = s.ring_degree;
      j["rewire"] = s.rewire;
      break;
    case Model::ScaleFree: j["d"] = s.d; break;
  }
  return j;
}

json to_json(const CounterSnapshot& c) {
  return {{"matchings_run", c.matchings_run},
          {"decompositions_run", c.decompositions_run},
          {"links_tested", c.links_tested},
          {"candidates_tested", c.candidates_tested}};
}

double enumeration_bound_sensor(int n) { return std::ldexp(1.0, n) - 1; }

double enumeration_bound_link(int n, std::size_t links) {
  return static_cast<double>(links) * enumeration_bound_sensor(n);
}

std::vector<BenchRow> run_bench(const BenchSpec& spec) {
  std::vector<BenchRow> rows;
  for (int n : spec.n_list) {
    for (int t = 0; t < spec.trials; ++t) {
      GenSpec gs = spec.base;
      gs.n = n;
      SplitMix64 mix(spec.base.seed ^ (static_cast<std::uint64_t>(n) << 32) ^ static_cast<std::uint64_t>(t));
      gs.seed = mix.next();
      BenchRow row;
      row.n = n;
      row.trial = t;
      auto start = std::chrono::steady_clock::now();
      StateDigraph g = generate(gs);
      FeasibleSolution seed = minimal_feasible(g);
      row.f_size = static_cast<int>(seed.all().size());

      CounterSnapshot before = snapshot();
      try {
        row.fs_size = static_cast<int>(srobust_solution(g, spec.mode, seed).solution.size());
      } catch (const Uncoverable&) {
      }
      CounterSnapshot mid = snapshot();
      try {
        row.fl_size = static_cast<int>(
            lrobust_solution(g, spec.mode, spec.undirected, seed.all()).solution.size());
      } catch (const std::exception&) {
      }
      CounterSnapshot after = snapshot();
      row.d_s = (mid - before).decompositions_run;
      row.d_l = (after - mid).decompositions_run;
      row.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      rows.push_back(row);
    }
  }
  return rows;
}

std::string bench_csv_header() { return "n,|F|,|F^s|,|F^l|,D_s,D_l,time_ms"; }

std::string bench_csv_row(const BenchRow& r) {
  std::ostringstream os;
  os << r.n << "," << r.f_size << ",";
  if (r.fs_size) os << *r.fs_size;
  os << ",";
  if (r.fl_size) os << *r.fl_size;
  os << "," << r.d_s << "," << r.d_l << ",";
  os.setf(std::ios::fixed);
  os.precision(3);
  os << r.time_ms;
  return os.str();
}

namespace {

template <class T>
T median_of(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return v[(v.size() - 1) / 2];
}

}  // namespace

std::vector<BenchRow> bench_medians(const std::vector<BenchRow>& rows) {
  std::map<int, std::vector<BenchRow>> by_n;
  for (const auto& r : rows) by_n[r.n].push_back(r);
  std::vector<BenchRow> out;
  for (const auto& [n, group] : by_n) {
    BenchRow m;
    m.n = n;
    m.trial = -1;
    std::vector<int> f, fs, fl;
    std::vector<std::uint64_t> ds, dl;
    std::vector<double> tm;
    for (const auto& r : group) {
      f.push_back(r.f_size);
      if (r.fs_size) fs.push_back(*r.fs_size);
      if (r.fl_size) fl.push_back(*r.fl_size);
      ds.push_back(r.d_s);
      dl.push_back(r.d_l);
      tm.push_back(r.time_ms);
    }
    m.f_size = median_of(f);
    if (!fs.empty()) m.fs_size = median_of(fs);
    if (!fl.empty()) m.fl_size = median_of(fl);
    m.d_s = median_of(ds);
    m.d_l = median_of(dl);
    m.time_ms = median_of(tm);
    out.push_back(m);
  }
  return out;
}

}  // namespace robsense
