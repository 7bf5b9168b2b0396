#include "bbapsp/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "bbapsp/dag_apsp.hpp"
#include "bbapsp/graph_io.hpp"
#include "bbapsp/oracle.hpp"
#include "bbapsp/topo.hpp"

namespace bbapsp {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> items;
  while (true) {
    const auto comma = s.find(',');
    auto item = trim(s.substr(0, comma));
    if (!item.empty()) items.push_back(item);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return items;
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InputError("config: bad value '" + std::string(text) + "' for " + std::string(key));
  }
  return value;
}

std::size_t clamp_m(double factor, std::size_t n, std::size_t lo, std::size_t hi) {
  const auto want = static_cast<std::size_t>(std::llround(std::max(0.0, factor) * static_cast<double>(n)));
  return std::clamp(want, std::min(lo, hi), hi);
}

Graph make_graph(const ExperimentConfig& cfg, std::size_t n, std::uint64_t seed) {
  switch (cfg.family) {
    case Family::kRandomStrong:
      return gen_random_digraph(n, n == 1 ? 0 : clamp_m(cfg.m_factor, n, n, n * (n - 1)), cfg.weights, seed);
    case Family::kComplete:
      return gen_complete_digraph(n, cfg.weights, seed);
    case Family::kDag:
      return gen_random_dag(n, clamp_m(cfg.m_factor, n, 0, n * (n - 1) / 2), cfg.weights, seed);
    case Family::kCycle:
      return gen_cycle(n, cfg.weights, seed);
    case Family::kWeak:
      return gen_weakly_connected(n, clamp_m(cfg.m_factor, n, n - 1, n * (n - 1)), cfg.weights, seed);
    case Family::kFile:
      return read_graph_path(cfg.input, true);
  }
  throw InputError("unknown family");
}

struct Oracle {
  DistanceMatrix dm;
  std::size_t mstar = 0;
};

void run_cell(const ExperimentConfig& cfg, const Graph& g, const std::optional<Oracle>& oracle,
              Variant variant, const std::string& engine_name, ExperimentRecord& rec) {
  const auto engine = make_engine(engine_name);
  const bool negative = g.has_negative_arc();
  const bool acyclic = is_acyclic(g.forward());
  if (negative && engine->requirement() == InputRequirement::kNonNegative) {
    rec.status = RecordStatus::kSkipped;
    rec.note = "engine " + engine_name + " needs non-negative weights";
    return;
  }
  if (!acyclic && (negative || engine->requirement() == InputRequirement::kAcyclic)) {
    rec.status = RecordStatus::kSkipped;
    rec.note = negative ? "negative weights need an acyclic graph"
                        : "engine " + engine_name + " needs an acyclic graph";
    return;
  }
  try {
    const bool pipeline = negative || cfg.family == Family::kDag;
    ApspResult result = pipeline
                            ? solve_dag_apsp(g, DagSolveOptions{variant, engine.get(), {}})
                            : solve_apsp(g, *engine, variant);
    rec.counters = result.counters;
    if (!oracle) {
      rec.status = RecordStatus::kUnverified;
      return;
    }
    VerificationReport report = verify_matrix(result, oracle->dm);
    report.merge(verify_counters(result.counters, g, oracle->mstar, variant));
    if (pipeline) {
      const Reweighting rw = johnson_reweight(g);
      report.merge(verify_sorted_lists(reweight_lists(result.lists, result.potentials),
                                       floyd_warshall(rw.graph)));
    } else {
      report.merge(verify_sorted_lists(result.lists, oracle->dm));
    }
    rec.status = report.passed() ? RecordStatus::kVerified : RecordStatus::kFailed;
    if (!report.passed()) {
      rec.note = report.violations.front().check + ": " + report.violations.front().witness;
    }
  } catch (const Error& e) {
    rec.status = RecordStatus::kFailed;
    rec.note = e.what();
  }
}

}  // namespace

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::kRandomStrong: return "random-strong";
    case Family::kComplete: return "complete";
    case Family::kDag: return "dag";
    case Family::kCycle: return "cycle";
    case Family::kWeak: return "weak";
    case Family::kFile: return "file";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::kRandomStrong, Family::kComplete, Family::kDag, Family::kCycle,
                   Family::kWeak, Family::kFile}) {
    if (to_string(f) == name) return f;
  }
  throw InputError("unknown family '" + std::string(name) +
                   "' (random-strong, complete, dag, cycle, weak, file)");
}

std::string_view to_string(RecordStatus s) noexcept {
  switch (s) {
    case RecordStatus::kVerified: return "true";
    case RecordStatus::kFailed: return "false";
    case RecordStatus::kUnverified: return "unverified";
    case RecordStatus::kSkipped: return "skipped";
  }
  return "?";
}

ExperimentConfig parse_config(std::string_view text) {
  ExperimentConfig cfg;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected key=value");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key == "family") {
      cfg.family = parse_family(value);
    } else if (key == "n") {
      cfg.sizes.clear();
      for (auto item : split_list(value)) cfg.sizes.push_back(parse_number<std::size_t>(key, item));
    } else if (key == "m_factor") {
      cfg.m_factor = parse_number<double>(key, value);
    } else if (key == "wmin") {
      cfg.weights.min = parse_number<std::int64_t>(key, value);
    } else if (key == "wmax") {
      cfg.weights.max = parse_number<std::int64_t>(key, value);
    } else if (key == "seeds") {
      cfg.seeds.clear();
      for (auto item : split_list(value)) cfg.seeds.push_back(parse_number<std::uint64_t>(key, item));
    } else if (key == "variants") {
      cfg.variants.clear();
      for (auto item : split_list(value)) cfg.variants.push_back(parse_variant(item));
    } else if (key == "engines") {
      cfg.engines.clear();
      for (auto item : split_list(value)) {
        make_engine(item);
        cfg.engines.emplace_back(item);
      }
    } else if (key == "input") {
      cfg.input = std::string(value);
    } else if (key == "oracle_cap") {
      cfg.oracle_cap = parse_number<std::size_t>(key, value);
    } else if (key == "threads") {
      cfg.threads = std::max(1u, parse_number<unsigned>(key, value));
    } else {
      throw ParseError(line_no, "unknown key '" + std::string(key) + "'");
    }
  }
  if (cfg.family == Family::kFile && cfg.input.empty()) {
    throw InputError("config: family=file needs input=<path>");
  }
  return cfg;
}

std::vector<ExperimentRecord> run_suite(const ExperimentConfig& cfg) {
  for (const auto& name : cfg.engines) make_engine(name);

  struct Group {
    std::size_t n;
    std::uint64_t seed;
  };
  std::vector<Group> groups;
  if (cfg.family == Family::kFile) {
    for (std::uint64_t seed : cfg.seeds) groups.push_back({0, seed});
    if (groups.size() > 1) groups.resize(1);
  } else {
    for (std::size_t n : cfg.sizes) {
      for (std::uint64_t seed : cfg.seeds) groups.push_back({n, seed});
    }
  }
  const std::size_t per_group = cfg.variants.size() * cfg.engines.size();
  std::vector<ExperimentRecord> records(groups.size() * per_group);

  auto run_group = [&](std::size_t gi) {
    const Group grp = groups[gi];
    const Graph g = make_graph(cfg, grp.n, grp.seed);
    std::optional<Oracle> oracle;
    if (g.num_vertices() <= cfg.oracle_cap) {
      Oracle o;
      o.dm = floyd_warshall(g);
      o.mstar = essential_edges(g, o.dm).count();
      oracle = std::move(o);
    }
    std::size_t slot = gi * per_group;
    for (Variant variant : cfg.variants) {
      for (const std::string& engine : cfg.engines) {
        ExperimentRecord& rec = records[slot++];
        rec.family = std::string(to_string(cfg.family));
        rec.n = g.num_vertices();
        rec.m = g.num_arcs();
        rec.seed = grp.seed;
        if (oracle) rec.mstar = oracle->mstar;
        rec.variant = std::string(to_string(variant));
        rec.engine = engine;
        run_cell(cfg, g, oracle, variant, engine, rec);
      }
    }
  };

  const unsigned workers = std::min<std::size_t>(cfg.threads, std::max<std::size_t>(groups.size(), 1));
  if (workers <= 1) {
    for (std::size_t gi = 0; gi < groups.size(); ++gi) run_group(gi);
    return records;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t gi = next++; gi < groups.size(); gi = next++) run_group(gi);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return records;
}

std::string emit_report(std::span<const ExperimentRecord> records, std::string_view format) {
  if (format == "csv") {
    std::ostringstream out;
    out << "family,n,m,mstar,variant,engine,psi_calls,cursor_advances,peak_aux_arcs,"
           "peak_active_cursors,wall_ms,verified\n";
    char wall[32];
    for (const auto& r : records) {
      std::snprintf(wall, sizeof(wall), "%.3f", static_cast<double>(r.counters.wall_time.count()) / 1e6);
      out << r.family << ',' << r.n << ',' << r.m << ',' << (r.mstar ? std::to_string(*r.mstar) : "")
          << ',' << r.variant << ',' << r.engine << ',' << r.counters.psi_calls << ','
          << r.counters.cursor_advances << ',' << r.counters.peak_aux_arcs << ','
          << r.counters.peak_active_cursors << ',' << wall << ',' << to_string(r.status) << '\n';
    }
    return out.str();
  }
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) {
      arr.push_back({{"family", r.family},
                     {"n", r.n},
                     {"m", r.m},
                     {"seed", r.seed},
                     {"mstar", r.mstar ? nlohmann::json(*r.mstar) : nlohmann::json(nullptr)},
                     {"variant", r.variant},
                     {"engine", r.engine},
                     {"psi_calls", r.counters.psi_calls},
                     {"cursor_advances", r.counters.cursor_advances},
                     {"peak_aux_arcs", r.counters.peak_aux_arcs},
                     {"peak_active_cursors", r.counters.peak_active_cursors},
                     {"wall_ms", static_cast<double>(r.counters.wall_time.count()) / 1e6},
                     {"verified", std::string(to_string(r.status))},
                     {"note", r.note}});
    }
    return arr.dump(2) + "\n";
  }
  throw InputError("unknown report format '" + std::string(format) + "' (csv, json)");
}

}  // namespace bbapsp
