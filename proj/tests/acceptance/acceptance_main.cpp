// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bbapsp/dag_apsp.hpp"
#include "bbapsp/generators.hpp"
#include "bbapsp/oracle.hpp"
#include "support/fixtures.hpp"
#include "support/phase_checks.hpp"

using namespace bbapsp;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::size_t checked = 0;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

void report(int id, const char* title, const Outcome& o, double seconds) {
  std::printf("%s  criterion %d  %-34s  %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", id, title,
              o.detail.c_str(), seconds);
  std::fflush(stdout);
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string label(const std::string& family, std::uint64_t seed, Variant v) {
  return family + " seed " + std::to_string(seed) + " " + std::string(to_string(v));
}

// Criteria 1-4 on one graph, both variants. `adversary` also runs an engine that
// prefers tied composite paths over direct arcs.
struct StrongRunChecks {
  Outcome equality, lists, budgets, guard;
  std::size_t ties = 0;

  void run(const Graph& g, const std::string& family, std::uint64_t seed, bool adversary) {
    const DistanceMatrix dm = floyd_warshall(g);
    const std::size_t mstar = essential_edges(g, dm).count();
    const DijkstraEngine dijkstra;
    const testing::TieAdversaryEngine hostile;
    std::vector<const SsspEngine*> engines{&dijkstra};
    if (adversary) engines.push_back(&hostile);
    for (const SsspEngine* engine : engines) {
      for (Variant v : {Variant::kBasic, Variant::kImproved}) {
        const std::string where = label(family, seed, v) + " " + std::string(engine->name());
        testing::PhaseChecker checker(dm);
        SolveOptions opts;
        opts.observer = checker.observer();
        ApspResult r;
        try {
          r = solve_apsp(g, *engine, v, opts);
        } catch (const InternalFault& e) {
          guard.fail(where + ": " + e.what());
          equality.fail(where + ": run aborted");
          continue;
        }
        ++equality.checked;
        if (r.matrix != dm) equality.fail(where + ": matrix differs from Floyd-Warshall");
        const VerificationReport lr = verify_sorted_lists(r.lists, dm);
        if (!lr.passed()) lists.fail(where + ": " + lr.violations.front().check + " " + lr.violations.front().witness);
        const VerificationReport cr = verify_counters(r.counters, g, mstar, v);
        if (!cr.passed()) budgets.fail(where + ": " + cr.violations.front().check + " " + cr.violations.front().witness);
        if (!checker.ok()) guard.fail(where + ": " + checker.failure());
        ties += checker.ties_seen();
      }
    }
  }
};

std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

}  // namespace

int main() {
  bool all = true;
  const auto started = std::chrono::steady_clock::now();

  // Criteria 1-4: 100 random strongly connected digraphs.
  {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20240601);
    StrongRunChecks c;
    for (std::uint64_t i = 0; i < 100; ++i) {
      const std::size_t n = uniform(rng, 2, 60);
      const std::size_t m = uniform(rng, n, std::min(4 * n, n * (n - 1)));
      const std::uint64_t seed = 1000 + i;
      c.run(gen_random_digraph(n, m, {0, 100}, seed), "random n=" + std::to_string(n), seed, true);
    }
    const double secs = since(t0);
    c.equality.detail = c.equality.pass ? std::to_string(c.equality.checked) + " runs equal (dijkstra and tie-adversarial engine, both variants)" : c.equality.detail;
    c.lists.detail = c.lists.pass ? "all lists sorted, distinct, exact" : c.lists.detail;
    c.budgets.detail = c.budgets.pass ? "all budgets held" : c.budgets.detail;
    c.guard.detail = c.guard.pass ? std::to_string(c.ties) + " star-arc equalities, all on the direct arc" : c.guard.detail;
    if (secs > 10.0) c.equality.fail("took " + std::to_string(secs) + "s (limit 10s)");
    report(1, "oracle equivalence, non-negative", c.equality, secs);
    report(2, "sorted list validity", c.lists, secs);
    report(3, "counter budgets", c.budgets, secs);
    report(4, "direct-arc guard", c.guard, secs);
    all = all && c.equality.pass && c.lists.pass && c.budgets.pass && c.guard.pass;
  }

  // Criterion 5: 100 random DAGs with negative lengths.
  {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20240602);
    Outcome o;
    for (std::uint64_t i = 0; i < 100; ++i) {
      const std::size_t n = uniform(rng, 2, 60);
      const std::size_t m = uniform(rng, 0, std::min(4 * n, n * (n - 1) / 2));
      const std::uint64_t seed = 5000 + i;
      const Graph g = gen_random_dag(n, m, {-50, 100}, seed);
      const std::string where = "dag n=" + std::to_string(n) + " seed " + std::to_string(seed);
      const Reweighting rw = johnson_reweight(g);
      for (const Arc& a : rw.graph.arcs()) {
        if (a.length < Weight::zero()) o.fail(where + ": negative reweighted arc");
      }
      DagSolveOptions opts;
      opts.solve.psi.check_aux_acyclic = true;
      try {
        const ApspResult r = solve_dag_apsp(g, opts);
        if (r.matrix != bellman_ford_all_pairs(g)) o.fail(where + ": matrix differs from Bellman-Ford");
      } catch (const Error& e) {
        o.fail(where + ": " + e.what());
      }
      ++o.checked;
    }
    const double secs = since(t0);
    if (o.pass) o.detail = std::to_string(o.checked) + " DAGs equal, reweighting >= 0, aux graphs acyclic";
    if (secs > 10.0) o.fail("took " + std::to_string(secs) + "s (limit 10s)");
    report(5, "DAG pipeline", o, secs);
    all = all && o.pass;
  }

  // Criterion 6: unit weights.
  {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20240603);
    StrongRunChecks c;
    for (std::uint64_t i = 0; i < 25; ++i) {
      const std::size_t n = uniform(rng, 2, 40);
      const std::size_t m = uniform(rng, n, std::min(4 * n, n * (n - 1)));
      c.run(gen_random_digraph(n, m, {1, 1}, 7000 + i), "unit n=" + std::to_string(n), 7000 + i, true);
    }
    for (std::uint64_t i = 0; i < 5; ++i) {
      const std::size_t n = 8 * (i + 1);
      c.run(gen_complete_digraph(n, {1, 1}, 7100 + i), "unit complete n=" + std::to_string(n), 7100 + i, true);
    }
    Outcome o;
    for (const Outcome* part : {&c.equality, &c.lists, &c.budgets, &c.guard}) {
      if (!part->pass) o.fail(part->detail);
    }
    if (o.pass) o.detail = "30 graphs pass criteria 1-4, " + std::to_string(c.ties) + " star-arc equalities";
    report(6, "tie stress", o, since(t0));
    all = all && o.pass;
  }

  // Criterion 7: scaling on complete digraphs.
  {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    std::ostringstream detail;
    double last_ratio = 0.0;
    for (std::size_t n : {50, 100, 200}) {
      const Graph g = gen_complete_digraph(n, {0, 1000000}, 9000 + n);
      const std::size_t mstar = essential_edges(g, floyd_warshall(g)).count();
      const ApspResult basic = solve_apsp(g, DijkstraEngine{}, Variant::kBasic);
      const ApspResult improved = solve_apsp(g, DijkstraEngine{}, Variant::kImproved);
      if (basic.matrix != improved.matrix) o.fail("variants disagree at n=" + std::to_string(n));
      const double bound = static_cast<double>(improved.counters.cursor_advances) /
                           (static_cast<double>(mstar) * static_cast<double>(n));
      const double ratio = static_cast<double>(basic.counters.cursor_advances) /
                           static_cast<double>(std::max<std::uint64_t>(improved.counters.cursor_advances, 1));
      char buf[96];
      std::snprintf(buf, sizeof(buf), "%sn=%zu m*=%zu imp/(m*n)=%.3f basic/imp=%.2f", detail.tellp() > 0 ? "; " : "", n, mstar, bound, ratio);
      detail << buf;
      if (bound > 4.0) o.fail("improved/(m*n) = " + std::to_string(bound) + " > 4 at n=" + std::to_string(n));
      if (ratio <= last_ratio) o.fail("basic/improved not increasing at n=" + std::to_string(n));
      last_ratio = ratio;
    }
    const double secs = since(t0);
    if (o.pass) o.detail = detail.str();
    if (secs > 60.0) o.fail("took " + std::to_string(secs) + "s (limit 60s)");
    report(7, "scaling signature", o, secs);
    all = all && o.pass;
  }

  // Criterion 8: golden traces.
  {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    const Graph k = testing::fixture_k();
    const ArcId a31 = testing::find_arc(k, 2, 0);
    const ArcId a12 = testing::find_arc(k, 0, 1);
    const ArcId a23 = testing::find_arc(k, 1, 2);
    const std::vector<std::vector<PathEntry>> appended{
        {{2, Weight(4)}, {0, Weight(1)}, {1, Weight(2)}},
        {{1, Weight(6)}, {2, Weight(5)}, {0, Weight(3)}},
    };
    const std::vector<std::vector<ArcId>> promotions{{a31, a12, a23}, {}};
    for (Variant v : {Variant::kBasic, Variant::kImproved}) {
      std::vector<std::vector<PathEntry>> seen_append;
      std::vector<std::vector<ArcId>> seen_promo;
      SolveOptions opts;
      opts.observer = [&](const PhaseTrace& t) {
        std::vector<PathEntry> row;
        for (const PathList& list : t.state.lists) row.push_back(list.back());
        seen_append.push_back(row);
        seen_promo.emplace_back(t.promoted_now.begin(), t.promoted_now.end());
      };
      solve_apsp(k, DijkstraEngine{}, v, opts);
      if (seen_append != appended) o.fail(std::string(to_string(v)) + ": K appends differ");
      if (seen_promo != promotions) o.fail(std::string(to_string(v)) + ": K promotions differ");
    }
    const ApspResult d = solve_dag_apsp(testing::fixture_d());
    const std::vector<Weight> h{Weight(0), Weight(-2), Weight(0)};
    const std::vector<Weight> row{Weight(0), Weight(-2), Weight(1)};
    if (d.potentials != h) o.fail("D potentials differ");
    if (!std::equal(row.begin(), row.end(), d.matrix.row(0).begin(), d.matrix.row(0).end())) {
      o.fail("D row 1 differs");
    }
    if (o.pass) o.detail = "K: 2 phases, promotions {(3,1),(1,2),(2,3)} then none; D: h=[0,-2,0], d(1,.)=[0,-2,1]";
    report(8, "fixture golden traces", o, since(t0));
    all = all && o.pass;
  }

  // Criterion 9: weakly connected inputs.
  {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20240604);
    Outcome o;
    std::size_t inf_pairs = 0;
    for (std::uint64_t i = 0; i < 25; ++i) {
      const std::size_t n = uniform(rng, 2, 60);
      const std::size_t m = uniform(rng, n - 1, std::min(2 * n, n * (n - 1)));
      const Graph g = gen_weakly_connected(n, m, {0, 100}, 11000 + i);
      const DistanceMatrix dm = floyd_warshall(g);
      for (VertexId a = 0; a < n; ++a)
        for (VertexId b = 0; b < n; ++b) inf_pairs += !dm.at(a, b).is_finite();
      for (Variant v : {Variant::kBasic, Variant::kImproved}) {
        const std::string where = label("weak n=" + std::to_string(n), 11000 + i, v);
        const ApspResult r = solve_apsp(g, DijkstraEngine{}, v);
        if (r.matrix != dm) o.fail(where + ": matrix differs (including +inf entries)");
        if (r.counters.psi_calls > n - 1) o.fail(where + ": psi_calls = " + std::to_string(r.counters.psi_calls));
      }
    }
    if (o.pass) o.detail = "25 graphs equal, " + std::to_string(inf_pairs) + " +inf pairs agree, psi_calls <= n-1";
    report(9, "non-strongly-connected inputs", o, since(t0));
    all = all && o.pass;
  }

  std::printf("%s  total %.2fs\n", all ? "ALL PASS" : "SOME FAILED", since(started));
  return all ? 0 : 1;
}
