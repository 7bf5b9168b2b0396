#include "bbapsp/oracle.hpp"

#include <algorithm>
#include <string>

#include "bbapsp/sssp.hpp"

namespace bbapsp {
namespace {

std::string pair_name(VertexId u, VertexId v) {
  return "(" + std::to_string(u + 1) + "," + std::to_string(v + 1) + ")";
}

}  // namespace

DistanceMatrix floyd_warshall(const Graph& g) {
  const std::size_t n = g.num_vertices();
  DistanceMatrix dm(n);
  for (const Arc& a : g.arcs()) {
    if (a.length < dm.at(a.tail, a.head)) dm.set(a.tail, a.head, a.length);
  }
  for (VertexId k = 0; k < n; ++k) {
    for (VertexId i = 0; i < n; ++i) {
      const Weight ik = dm.at(i, k);
      if (!ik.is_finite()) continue;
      for (VertexId j = 0; j < n; ++j) {
        const Weight via = ik + dm.at(k, j);
        if (via < dm.at(i, j)) dm.set(i, j, via);
      }
    }
    for (VertexId i = 0; i < n; ++i) {
      if (dm.at(i, i) < Weight::zero()) {
        throw NegativeCycleError("negative cycle through vertex " + std::to_string(i + 1), {i});
      }
    }
  }
  return dm;
}

DistanceMatrix bellman_ford_all_pairs(const Graph& g) {
  const std::size_t n = g.num_vertices();
  DistanceMatrix dm(n);
  for (VertexId s = 0; s < n; ++s) {
    const SsspOutput out = bellman_ford(g, s);
    for (VertexId v = 0; v < n; ++v) dm.set(s, v, out.dist[v]);
  }
  return dm;
}

EssentialArcs essential_edges(const Graph& g, const DistanceMatrix& dm) {
  EssentialArcs result;
  const std::size_t n = g.num_vertices();
  for (ArcId id = 0; id < g.num_arcs(); ++id) {
    const Arc& a = g.arc(id);
    for (VertexId s = 0; s < n; ++s) {
      const Weight to_tail = dm.at(s, a.tail);
      if (to_tail.is_finite() && weights_match(to_tail + a.length, dm.at(s, a.head))) {
        result.arcs.push_back(id);
        break;
      }
    }
  }
  return result;
}

VerificationReport verify_matrix(const DistanceMatrix& actual, const DistanceMatrix& expected) {
  if (actual.size() != expected.size()) {
    throw InputError("matrix has " + std::to_string(actual.size()) + " rows, expected " +
                     std::to_string(expected.size()));
  }
  VerificationReport report;
  for (VertexId u = 0; u < actual.size(); ++u) {
    for (VertexId v = 0; v < actual.size(); ++v) {
      if (!weights_match(actual.at(u, v), expected.at(u, v))) {
        report.add("matrix", "d" + pair_name(u, v) + " = " + to_string(actual.at(u, v)) +
                                 ", oracle " + to_string(expected.at(u, v)));
      }
    }
  }
  return report;
}

VerificationReport verify_sorted_lists(std::span<const PathList> lists, const DistanceMatrix& dm) {
  VerificationReport report;
  const std::size_t n = dm.size();
  if (lists.size() != n) {
    report.add("lists", std::to_string(lists.size()) + " lists for " + std::to_string(n) + " vertices");
    return report;
  }
  for (VertexId v = 0; v < n; ++v) {
    const PathList& list = lists[v];
    const std::string owner = "S_" + std::to_string(v + 1);
    if (list.empty() || list.front().source != v || list.front().dist != Weight::zero()) {
      report.add("head", owner + " does not start with its owner at distance 0");
      continue;
    }
    std::vector<std::uint8_t> seen(n, 0);
    std::vector<Weight> listed;
    for (std::size_t k = 0; k < list.size(); ++k) {
      const PathEntry& e = list[k];
      if (e.source >= n || !e.dist.is_finite()) {
        report.add("entry", owner + "[" + std::to_string(k) + "] is malformed");
        continue;
      }
      if (k > 0 && e.dist < list[k - 1].dist && !weights_match(e.dist, list[k - 1].dist)) {
        report.add("sorted", owner + "[" + std::to_string(k) + "] = " + to_string(e.dist) +
                                 " after " + to_string(list[k - 1].dist));
      }
      if (seen[e.source]) {
        report.add("distinct", owner + " lists source " + std::to_string(e.source + 1) + " twice");
      }
      seen[e.source] = 1;
      if (!weights_match(e.dist, dm.at(e.source, v))) {
        report.add("exact", owner + " has d" + pair_name(e.source, v) + " = " + to_string(e.dist) +
                                ", oracle " + to_string(dm.at(e.source, v)));
      }
      if (k > 0) listed.push_back(e.dist);
    }
    std::vector<Weight> oracle;
    for (VertexId s = 0; s < n; ++s) {
      if (s != v && dm.at(s, v).is_finite()) oracle.push_back(dm.at(s, v));
    }
    std::sort(listed.begin(), listed.end());
    std::sort(oracle.begin(), oracle.end());
    const bool same = listed.size() == oracle.size() &&
                      std::equal(listed.begin(), listed.end(), oracle.begin(), weights_match);
    if (!same) {
      report.add("multiset", owner + " holds " + std::to_string(listed.size()) +
                                 " distances, oracle has " + std::to_string(oracle.size()) +
                                 (listed.size() == oracle.size() ? " (values differ)" : ""));
    }
  }
  return report;
}

VerificationReport verify_counters(const RunCounters& c, const Graph& g, std::size_t mstar,
                                   Variant variant) {
  VerificationReport report;
  const std::uint64_t n = g.num_vertices();
  const std::uint64_t m = g.num_arcs();
  const std::uint64_t budget = mstar + n;
  auto check = [&](const char* name, std::uint64_t value, std::uint64_t limit) {
    if (value > limit) {
      report.add(name, std::to_string(value) + " > " + std::to_string(limit));
    }
  };
  check("psi_calls", c.psi_calls, n - 1);
  check("peak_aux_arcs", c.peak_aux_arcs, budget);
  if (variant == Variant::kImproved) {
    check("peak_active_cursors", c.peak_active_cursors, budget);
    check("cursor_advances", c.cursor_advances, budget * n);
  } else {
    check("cursor_advances", c.cursor_advances, m * n);
  }
  return report;
}

}  // namespace bbapsp
