#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "robsense/lrobust.hpp"
#include "robsense/netgen.hpp"
#include "robsense/srobust.hpp"

namespace robsense {

using nlohmann::json;

inline constexpr const char* kReportSchemaVersion = "1.0";

json to_json(const VertexSet& s);
json to_json(const CoverInstance& inst);
CoverInstance cover_from_json(const json& j);
json to_json(const CoverSolution& sol);
json to_json(const FeasibleSolution& f);
json to_json(const SRobustResult& r);
json to_json(const LRobustResult& r);
json to_json(const GenSpec& s);
json to_json(const CounterSnapshot& c);

// Enumeration bounds for context: every nonempty subset of states, and that
// again for every link.
double enumeration_bound_sensor(int n);
double enumeration_bound_link(int n, std::size_t links);

struct BenchRow {
  int n = 0;
  int trial = 0;
  int f_size = 0;
  std::optional<int> fs_size;  // empty when no s-robust extension exists
  std::optional<int> fl_size;  // empty when the link analysis failed
  std::uint64_t d_s = 0;
  std::uint64_t d_l = 0;
  double time_ms = 0;
};

struct BenchSpec {
  GenSpec base;                // model parameters; n and seed are overwritten per trial
  std::vector<int> n_list;
  int trials = 1;
  CoverMode mode = CoverMode::Greedy;
  bool undirected = false;     // link failures remove both directions of a pair
};

std::vector<BenchRow> run_bench(const BenchSpec& spec);
std::string bench_csv_header();
std::string bench_csv_row(const BenchRow& r);
// Per-n medians over the rows that produced a value.
std::vector<BenchRow> bench_medians(const std::vector<BenchRow>& rows);

}  // namespace robsense
