#include "robsense/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "robsense/oracle.hpp"
#include "robsense/report.hpp"

namespace robsense {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "# fixture: fig5" marks a transcribed example.
std::optional<std::string> fixture_tag(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto pos = line.find("# fixture:");
    if (pos == std::string::npos) continue;
    std::istringstream rest(line.substr(pos + 10));
    std::string tag;
    rest >> tag;
    if (!tag.empty()) return tag;
  }
  return std::nullopt;
}

std::string braces(const VertexSet& s) {
  std::string r = "{";
  bool first = true;
  for (int v : s) {
    if (!first) r += ", ";
    r += std::to_string(v);
    first = false;
  }
  return r + "}";
}

std::string chain(const std::vector<int>& vs) {
  std::string r;
  for (std::size_t i = 0; i < vs.size(); ++i) r += (i ? " -> " : "") + std::to_string(vs[i]);
  return r;
}

VertexSet to_set(const std::vector<int>& v) { return VertexSet(v.begin(), v.end()); }

void check_range(const StateDigraph& g, const VertexSet& s, const std::string& what) {
  for (int v : s)
    if (v < 1 || v > g.n()) throw UsageError(what + " vertex " + std::to_string(v) + " out of range");
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> r;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      r.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("bad integer '" + tok + "' in list");
    }
  }
  return r;
}

struct Loaded {
  std::string path;
  std::string text;
  StateDigraph g;
};

Loaded load(const std::string& path) {
  Loaded l{path, read_file(path), {}};
  l.g = parse_edge_list(l.text);
  return l;
}

json input_json(const Loaded& l) {
  return {{"path", l.path},
          {"n", l.g.n()},
          {"edges", l.g.edge_count()},
          {"undirected_pairs", l.g.undirected_pairs().size()}};
}

json base_report(const std::string& command, const Loaded& l) {
  auto tag = fixture_tag(l.text);
  return {{"schema_version", kReportSchemaVersion},
          {"command", command},
          {"input", input_json(l)},
          {"paper_example", tag ? json(*tag) : json(nullptr)}};
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

struct Options {
  bool json_errors = false;

  std::string file;
  std::string sensors;
  std::string seed_list;
  bool exact = false;
  bool greedy = false;
  bool undirected = false;
  std::string output;

  std::string gadget_kind;
  std::string cover_file;

  std::string model = "scale-free";
  GenSpec gen;
  std::string n_list = "50,100,200,300";
  int trials = 1;
  std::string medians;
};

CoverMode mode_of(const Options& o) { return o.exact ? CoverMode::Exact : CoverMode::Greedy; }

int cmd_check(const Options& o, std::ostream& out) {
  Loaded l = load(o.file);
  VertexSet f = to_set(parse_int_list(o.sensors));
  check_range(l.g, f, "sensor");
  bool tips = tips_condition(l.g, f);
  bool sinks = sinks_condition(scc_decompose(l.g), f);
  out << "F = " << braces(f) << ": " << (tips && sinks ? "feasible" : "infeasible") << "\n";
  if (!tips) out << "  tips condition fails: some path tip is not measured\n";
  if (!sinks) out << "  sink condition fails: some sink component has no sensor\n";
  return 0;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  Loaded l = load(o.file);
  PncDecomposition d = min_pnc(l.g);
  out << "paths: " << d.paths.size() << "\n";
  for (const auto& p : d.paths) out << "  " << chain(p) << "\n";
  out << "cycles: " << d.cycles.size() << "\n";
  for (const auto& c : d.cycles) out << "  " << chain(c) << " -> " << c.front() << "\n";
  out << "tips: " << braces(d.tips) << "\n";
  return 0;
}

int cmd_place(const Options& o, std::ostream& out) {
  Loaded l = load(o.file);
  out << "F = " << braces(minimal_feasible(l.g).all()) << "\n";
  return 0;
}

void finish_report(json& rep, const VertexSet& solution, const CounterSnapshot& c0,
                   std::chrono::steady_clock::time_point t0) {
  rep["solution"] = to_json(solution);
  rep["counters"] = to_json(snapshot() - c0);
  rep["wall_time_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_robust_sensor(const Options& o, std::ostream& out) {
  auto t0 = std::chrono::steady_clock::now();
  CounterSnapshot c0 = snapshot();
  Loaded l = load(o.file);
  std::optional<FeasibleSolution> seed;
  if (!o.seed_list.empty()) {
    VertexSet tips = to_set(parse_int_list(o.seed_list));
    check_range(l.g, tips, "seed");
    if (!can_force_tips(l.g, tips)) throw UsageError("seed tips are not the tips of any decomposition");
    seed = seed_from_tips(l.g, tips);
  }
  SRobustResult r = srobust_solution(l.g, mode_of(o), seed);
  json rep = base_report("robust-sensor", l);
  rep["seed"] = to_json(r.seed.all());
  rep["certificates"] = {{"srobust", to_json(r)}};
  rep["enumeration_bound"] = {{"D_prime_s", enumeration_bound_sensor(l.g.n())}};
  finish_report(rep, r.solution, c0, t0);
  write_text(o.output, rep.dump(2) + "\n", out);
  return 0;
}

int cmd_robust_link(const Options& o, std::ostream& out) {
  auto t0 = std::chrono::steady_clock::now();
  CounterSnapshot c0 = snapshot();
  Loaded l = load(o.file);
  std::optional<VertexSet> seed;
  if (!o.seed_list.empty()) {
    seed = to_set(parse_int_list(o.seed_list));
    check_range(l.g, *seed, "seed");
    if (!is_feasible(l.g, *seed)) throw UsageError("seed sensor set is not feasible");
  }
  LRobustResult r = lrobust_solution(l.g, mode_of(o), o.undirected, seed);
  json rep = base_report("robust-link", l);
  rep["seed"] = to_json(r.seed);
  rep["certificates"] = {{"lrobust", to_json(r)}};
  rep["enumeration_bound"] = {
      {"D_prime_l", enumeration_bound_link(l.g.n(), failure_units(l.g, o.undirected).size())}};
  finish_report(rep, r.solution, c0, t0);
  write_text(o.output, rep.dump(2) + "\n", out);
  return 0;
}

SetSystem set_system_from_json(const json& j) {
  SetSystem s;
  s.p = j.at("p").get<int>();
  s.sets = j.at("sets").get<std::vector<std::vector<int>>>();
  return s;
}

int cmd_gadget(const Options& o, std::ostream& out) {
  json j;
  try {
    j = json::parse(read_file(o.cover_file));
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("cover file: ") + e.what());
  }
  SetSystem s;
  try {
    s = set_system_from_json(j);
  } catch (const json::exception& e) {
    throw UsageError(std::string("cover file: ") + e.what());
  }
  validate(s);
  StateDigraph g = o.gadget_kind == "sensor" ? sensor_gadget(s) : link_gadget(s);
  std::ostringstream text;
  text << "# " << o.gadget_kind << " gadget, p=" << s.p << " k=" << s.sets.size() << "\n";
  text << serialize(g);
  write_text(o.output, text.str(), out);
  return 0;
}

GenSpec gen_spec(const Options& o) {
  GenSpec s = o.gen;
  s.model = parse_model(o.model);
  return s;
}

int cmd_gen(const Options& o, std::ostream& out) {
  GenSpec s = gen_spec(o);
  StateDigraph g = generate(s);
  std::string text = serialize(g);
  if (o.output.empty() || o.output == "-") {
    out << text;
    return 0;
  }
  write_text(o.output, text, out);
  write_text(o.output + ".json", to_json(s).dump(2) + "\n", out);
  return 0;
}

int cmd_bench(const Options& o, std::ostream& out) {
  BenchSpec b;
  b.base = gen_spec(o);
  b.n_list = parse_int_list(o.n_list);
  if (b.n_list.empty()) throw UsageError("empty --n-list");
  for (int n : b.n_list) {
    GenSpec probe = b.base;
    probe.n = n;
    validate(probe);
  }
  if (o.trials < 1) throw UsageError("--trials must be positive");
  b.trials = o.trials;
  b.mode = mode_of(o);
  b.undirected = o.undirected;
  auto rows = run_bench(b);
  std::ostringstream csv;
  csv << bench_csv_header() << "\n";
  for (const auto& r : rows) csv << bench_csv_row(r) << "\n";
  write_text(o.output, csv.str(), out);
  if (!o.medians.empty()) {
    std::ostringstream med;
    med << bench_csv_header() << ",D_prime_s\n";
    for (const auto& r : bench_medians(rows))
      med << bench_csv_row(r) << "," << enumeration_bound_sensor(r.n) << "\n";
    write_text(o.medians, med.str(), out);
  }
  return 0;
}

void report_error(const Options& o, std::ostream& err, const std::string& kind,
                  const std::string& message, const json& extra = json::object()) {
  if (o.json_errors) {
    json j = {{"error", kind}, {"message", message}};
    j.update(extra);
    err << j.dump() << "\n";
  } else {
    err << "error: " << message << "\n";
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Dedicated sensor placement for structural observability"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json_errors, "Machine-readable errors on stderr");

  auto add_mode = [&](CLI::App* sub) {
    auto* ex = sub->add_flag("--exact", o.exact, "Solve the cover exactly");
    auto* gr = sub->add_flag("--greedy", o.greedy, "Greedy cover (default)");
    ex->excludes(gr);
  };

  auto* check = app.add_subcommand("check", "Test whether a sensor set is feasible");
  check->add_option("file", o.file, "State digraph (.sdg)")->required();
  check->add_option("--sensors", o.sensors, "Comma-separated vertices")->required();

  auto* decompose = app.add_subcommand("decompose", "Minimum path-and-cycle decomposition");
  decompose->add_option("file", o.file)->required();

  auto* place = app.add_subcommand("place", "Minimal feasible sensor set");
  place->add_option("file", o.file)->required();

  auto* rs = app.add_subcommand("robust-sensor", "Placement surviving any single sensor loss");
  rs->add_option("file", o.file)->required();
  add_mode(rs);
  rs->add_option("--seed-tips", o.seed_list, "Tips of the seed solution, comma-separated");
  rs->add_option("-o,--output", o.output, "Report file");

  auto* rl = app.add_subcommand("robust-link", "Placement surviving any single link loss");
  rl->add_option("file", o.file)->required();
  add_mode(rl);
  rl->add_flag("--undirected", o.undirected, "Undirected pairs fail in both directions");
  rl->add_option("--seed", o.seed_list, "Feasible seed sensor set, comma-separated");
  rl->add_option("-o,--output", o.output, "Report file");

  auto* gadget = app.add_subcommand("gadget", "Reduction digraph for a set-cover instance");
  gadget->add_option("kind", o.gadget_kind)->required()->check(CLI::IsMember({"sensor", "link"}));
  gadget->add_option("--cover", o.cover_file, "JSON {\"p\": P, \"sets\": [[...], ...]}")->required();
  gadget->add_option("-o,--output", o.output);

  auto add_model = [&](CLI::App* sub) {
    sub->add_option("--model", o.model)->check(CLI::IsMember({"er", "small-world", "scale-free"}));
    sub->add_option("--prob", o.gen.prob, "ER edge probability");
    sub->add_option("--ring-degree", o.gen.ring_degree, "Small-world ring degree");
    sub->add_option("--rewire", o.gen.rewire, "Small-world rewiring probability");
    sub->add_option("--d", o.gen.d, "Scale-free links per new node");
    sub->add_option("--direct-fraction", o.gen.direct_fraction, "Share of pairs made one-way");
    sub->add_option("--seed", o.gen.seed);
  };

  auto* gen = app.add_subcommand("gen", "Random state digraph");
  add_model(gen);
  gen->add_option("--n", o.gen.n)->required();
  gen->add_option("-o,--output", o.output, "Output .sdg; a .json sidecar is written next to it");

  auto* bench = app.add_subcommand("bench", "Scaling campaign as CSV");
  add_model(bench);
  bench->add_option("--n-list", o.n_list);
  bench->add_option("--trials", o.trials);
  add_mode(bench);
  bench->add_flag("--undirected", o.undirected);
  bench->add_option("-o,--output", o.output, "CSV file");
  bench->add_option("--medians", o.medians, "Per-n medians CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    report_error(o, err, "usage", e.what());
    return 2;
  }

  try {
    if (*check) return cmd_check(o, out);
    if (*decompose) return cmd_decompose(o, out);
    if (*place) return cmd_place(o, out);
    if (*rs) return cmd_robust_sensor(o, out);
    if (*rl) return cmd_robust_link(o, out);
    if (*gadget) return cmd_gadget(o, out);
    if (*gen) return cmd_gen(o, out);
    if (*bench) return cmd_bench(o, out);
  } catch (const Uncoverable& e) {
    report_error(o, err, "uncoverable", e.what(), {{"element", e.element()}});
    return 1;
  } catch (const ParseError& e) {
    report_error(o, err, "parse", e.what(), {{"line", e.line()}});
    return 2;
  } catch (const std::exception& e) {
    report_error(o, err, "usage", e.what());
    return 2;
  }
  return 2;
}

}  // namespace robsense
