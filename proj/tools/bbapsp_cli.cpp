// bbapsp: generate graphs, solve all-pairs shortest paths through a black-box
// SSSP engine, verify results against brute force, and run counter sweeps.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bbapsp/bench.hpp"
#include "bbapsp/dag_apsp.hpp"
#include "bbapsp/driver.hpp"
#include "bbapsp/generators.hpp"
#include "bbapsp/graph_io.hpp"
#include "bbapsp/oracle.hpp"
#include "bbapsp/result_io.hpp"

namespace {

using namespace bbapsp;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr std::size_t kOracleCap = 500;

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InputError("cannot write " + out_path);
  out << text;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string counters_line(const RunCounters& c) {
  std::ostringstream s;
  s << "psi_calls=" << c.psi_calls << " cursor_advances=" << c.cursor_advances
    << " viability_checks=" << c.viability_checks << " peak_aux_arcs=" << c.peak_aux_arcs
    << " peak_active_cursors=" << c.peak_active_cursors << " promotions=" << c.promotions
    << " refutations=" << c.refutations << " wall_ms=" << static_cast<double>(c.wall_time.count()) / 1e6;
  return s.str();
}

struct GenFlags {
  std::string family;
  std::size_t n = 0;
  std::optional<std::size_t> m;
  std::int64_t wmin = 0;
  std::int64_t wmax = 100;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_gen(const GenFlags& f) {
  const Family family = parse_family(f.family);
  const WeightRange w{f.wmin, f.wmax};
  const std::size_t n = f.n;
  Graph g;
  switch (family) {
    case Family::kRandomStrong:
      g = gen_random_digraph(n, f.m.value_or(n == 1 ? 0 : std::min(4 * n, n * (n - 1))), w, f.seed);
      break;
    case Family::kComplete:
      g = gen_complete_digraph(n, w, f.seed);
      break;
    case Family::kDag:
      g = gen_random_dag(n, f.m.value_or(std::min(2 * n, n * (n - 1) / 2)), w, f.seed);
      break;
    case Family::kCycle:
      g = gen_cycle(n, w, f.seed);
      break;
    case Family::kWeak:
      g = gen_weakly_connected(n, f.m.value_or(std::min(2 * n, n * (n - 1))), w, f.seed);
      break;
    case Family::kFile:
      throw InputError("gen cannot produce family 'file'");
  }
  emit(f.out, write_graph_file(g));
  std::cerr << "n=" << g.num_vertices() << " m=" << g.num_arcs() << '\n';
  return kOk;
}

struct SolveFlags {
  std::string input;
  std::string engine;
  std::string variant = "improved";
  bool dag = false;
  std::string format = "json";
  std::string out;
};

int cmd_solve(const SolveFlags& f) {
  if (f.format != "json" && f.format != "tsv") throw InputError("--format must be json or tsv");
  const Graph g = read_graph_path(f.input, true);
  const Variant variant = parse_variant(f.variant);
  const auto engine = make_engine(f.engine.empty() ? (f.dag ? "dag" : "dijkstra") : f.engine);

  ApspResult result;
  if (f.dag) {
    result = solve_dag_apsp(g, DagSolveOptions{variant, engine.get(), {}});
  } else {
    if (g.has_negative_arc()) throw InputError("negative arc lengths need --dag");
    result = solve_apsp(g, *engine, variant);
  }
  emit(f.out, f.format == "json" ? dump_result(result_to_json(result)) : matrix_to_tsv(result.matrix));
  std::cerr << counters_line(result.counters) << '\n';
  return kOk;
}

struct VerifyFlags {
  std::string input;
  std::string result;
  std::string out;
};

int cmd_verify(const VerifyFlags& f) {
  const Graph g = read_graph_path(f.input, true);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(slurp(f.result));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("result file is not JSON: ") + e.what());
  }
  const ApspResult result = result_from_json(doc);
  if (result.n != g.num_vertices()) {
    throw InputError("result has n=" + std::to_string(result.n) + ", graph has n=" +
                     std::to_string(g.num_vertices()));
  }

  const DistanceMatrix dm = floyd_warshall(g);
  VerificationReport report = verify_matrix(result, dm);
  if (!result.lists.empty()) {
    if (!result.potentials.empty()) {
      if (result.potentials.size() != g.num_vertices()) throw InputError("potentials have wrong length");
      const Reweighting rw = johnson_reweight(g);
      report.merge(verify_sorted_lists(reweight_lists(result.lists, result.potentials),
                                       floyd_warshall(rw.graph)));
    } else {
      report.merge(verify_sorted_lists(result.lists, dm));
    }
  }
  const std::size_t mstar = essential_edges(g, dm).count();
  report.merge(verify_counters(result.counters, g, mstar, result.variant));

  emit(f.out, report_to_json(report).dump(2) + "\n");
  for (const auto& v : report.violations) std::cerr << v.check << ": " << v.witness << '\n';
  return report.passed() ? kOk : kVerifyFailed;
}

struct StatsFlags {
  std::string input;
  bool essential = false;
  bool force = false;
};

int cmd_stats(const StatsFlags& f) {
  const Graph g = read_graph_path(f.input, true);
  if (g.num_vertices() > kOracleCap && !f.force) {
    throw InputError("n=" + std::to_string(g.num_vertices()) + " exceeds the oracle cap of " +
                     std::to_string(kOracleCap) + "; pass --force");
  }
  const DistanceMatrix dm = floyd_warshall(g);
  const EssentialArcs ess = essential_edges(g, dm);
  std::cout << "n=" << g.num_vertices() << "\nm=" << g.num_arcs() << "\nmstar=" << ess.count() << '\n';
  if (f.essential) {
    for (ArcId id : ess.arcs) {
      const Arc& a = g.arc(id);
      std::cout << "a " << a.tail + 1 << ' ' << a.head + 1 << ' ' << to_string(a.length) << '\n';
    }
  }
  return kOk;
}

struct BenchFlags {
  std::string config;
  std::string format = "csv";
  std::string out;
  std::string family, sizes, seeds, variants, engines, input;
  std::optional<double> m_factor;
  std::optional<std::int64_t> wmin, wmax;
  std::optional<unsigned> threads;
};

int cmd_bench(const BenchFlags& f) {
  std::string text = f.config.empty() ? std::string() : slurp(f.config);
  auto set = [&](const char* key, const std::string& value) {
    if (!value.empty()) text += std::string("\n") + key + "=" + value;
  };
  set("family", f.family);
  set("n", f.sizes);
  set("seeds", f.seeds);
  set("variants", f.variants);
  set("engines", f.engines);
  set("input", f.input);
  if (f.m_factor) set("m_factor", std::to_string(*f.m_factor));
  if (f.wmin) set("wmin", std::to_string(*f.wmin));
  if (f.wmax) set("wmax", std::to_string(*f.wmax));
  if (f.threads) set("threads", std::to_string(*f.threads));

  const ExperimentConfig cfg = parse_config(text);
  const auto records = run_suite(cfg);
  emit(f.out, emit_report(records, f.format));
  bool failed = false;
  for (const auto& r : records) {
    if (r.status == RecordStatus::kFailed) {
      failed = true;
      std::cerr << "n=" << r.n << " seed=" << r.seed << ' ' << r.variant << '/' << r.engine << ": "
                << r.note << '\n';
    }
  }
  return failed ? kVerifyFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"All-pairs shortest paths through a black-box single-source engine"};
  app.require_subcommand(1);

  GenFlags gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph file");
  gen_cmd->add_option("--family", gen.family, "random-strong | complete | dag | cycle | weak")->required();
  gen_cmd->add_option("--n", gen.n, "Vertex count")->required();
  gen_cmd->add_option("--m", gen.m, "Arc count (family default when omitted)");
  gen_cmd->add_option("--wmin", gen.wmin, "Smallest arc length");
  gen_cmd->add_option("--wmax", gen.wmax, "Largest arc length");
  gen_cmd->add_option("--seed", gen.seed, "RNG seed");
  gen_cmd->add_option("--out", gen.out, "Output file (stdout when omitted)");

  SolveFlags solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve APSP for a graph file");
  solve_cmd->add_option("input", solve.input, "Graph file")->required();
  solve_cmd->add_option("--engine", solve.engine, "dijkstra | dag | bellman-ford");
  solve_cmd->add_option("--variant", solve.variant, "basic | improved");
  solve_cmd->add_flag("--dag", solve.dag, "Johnson reweighting + DAG pipeline (negative lengths allowed)");
  solve_cmd->add_option("--format", solve.format, "json | tsv");
  solve_cmd->add_option("--out", solve.out, "Output file (stdout when omitted)");

  VerifyFlags verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a result file against brute force");
  verify_cmd->add_option("input", verify.input, "Graph file")->required();
  verify_cmd->add_option("result", verify.result, "Result JSON from solve")->required();
  verify_cmd->add_option("--out", verify.out, "Report file (stdout when omitted)");

  StatsFlags stats;
  auto* stats_cmd = app.add_subcommand("stats", "Print n, m and the essential-arc count m*");
  stats_cmd->add_option("input", stats.input, "Graph file")->required();
  stats_cmd->add_flag("--essential", stats.essential, "Also list the essential arcs");
  stats_cmd->add_flag("--force", stats.force, "Allow n above the oracle cap");

  BenchFlags bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run a counter sweep");
  bench_cmd->add_option("--config", bench.config, "key=value config file");
  bench_cmd->add_option("--format", bench.format, "csv | json");
  bench_cmd->add_option("--out", bench.out, "Output file (stdout when omitted)");
  bench_cmd->add_option("--family", bench.family, "Graph family");
  bench_cmd->add_option("--n", bench.sizes, "Comma-separated sizes");
  bench_cmd->add_option("--seed", bench.seeds, "Comma-separated seeds");
  bench_cmd->add_option("--variant", bench.variants, "Comma-separated variants");
  bench_cmd->add_option("--engine", bench.engines, "Comma-separated engines");
  bench_cmd->add_option("--input", bench.input, "Graph file for family=file");
  bench_cmd->add_option("--m-factor", bench.m_factor, "m = m_factor * n");
  bench_cmd->add_option("--wmin", bench.wmin, "Smallest arc length");
  bench_cmd->add_option("--wmax", bench.wmax, "Largest arc length");
  bench_cmd->add_option("--threads", bench.threads, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen);
    if (*solve_cmd) return cmd_solve(solve);
    if (*verify_cmd) return cmd_verify(verify);
    if (*stats_cmd) return cmd_stats(stats);
    if (*bench_cmd) return cmd_bench(bench);
  } catch (const InternalFault& e) {
    std::cerr << "internal fault: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
