#include "bbapsp/dag_apsp.hpp"

#include <vector>

namespace bbapsp {

TopoOrder topo_order(const Graph& g) { return topological_order(g.forward()); }

Reweighting johnson_reweight(const Graph& g) {
  const TopoOrder topo = topo_order(g);
  const std::size_t n = g.num_vertices();
  std::vector<Weight> h(n, Weight::zero());
  for (VertexId u : topo.order) {
    for (const OutArc& a : g.forward().out(u)) {
      Weight via = h[u] + a.length;
      if (via < h[a.head]) h[a.head] = via;
    }
  }
  std::vector<Arc> arcs(g.arcs().begin(), g.arcs().end());
  for (Arc& a : arcs) {
    // (h(u) + l) >= h(v) holds exactly in floating point because h(v) is a
    // minimum that includes h(u) + l, so the difference cannot dip below 0.
    a.length = (h[a.tail] + a.length) - h[a.head];
  }
  return Reweighting{Graph::build(n, arcs, false), std::move(h)};
}

ApspResult solve_dag_apsp(const Graph& g, const DagSolveOptions& options) {
  Reweighting rw = johnson_reweight(g);
  const DagEngine default_engine;
  const SsspEngine& engine = options.engine ? *options.engine : default_engine;

  ApspResult result = solve_apsp(rw.graph, engine, options.variant, options.solve);
  const auto& h = rw.potentials;
  const std::size_t n = g.num_vertices();
  DistanceMatrix dm(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      const Weight d = result.matrix.at(u, v);
      if (d.is_finite()) dm.set(u, v, (d + h[v]) - h[u]);
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    for (PathEntry& e : result.lists[v]) e.dist = (e.dist + h[v]) - h[e.source];
  }
  result.matrix = std::move(dm);
  result.potentials = std::move(h);
  return result;
}

std::vector<PathList> reweight_lists(std::span<const PathList> lists,
                                     std::span<const Weight> potentials) {
  std::vector<PathList> out(lists.begin(), lists.end());
  for (VertexId v = 0; v < out.size(); ++v) {
    for (PathEntry& e : out[v]) {
      if (e.source < potentials.size() && e.dist.is_finite()) {
        e.dist = (e.dist + potentials[e.source]) - potentials[v];
      }
    }
  }
  return out;
}

}  // namespace bbapsp
