#include "bbapsp/sssp.hpp"

#include <functional>
#include <queue>
#include <string>

#include "bbapsp/topo.hpp"

namespace bbapsp {
namespace {

SsspOutput empty_output(std::size_t n, VertexId source) {
  if (source >= n) throw InputError("source vertex out of range");
  SsspOutput out;
  out.dist.assign(n, Weight::infinity());
  out.parent.assign(n, kNoVertex);
  out.dist[source] = Weight::zero();
  return out;
}

std::string arc_name(VertexId u, const OutArc& a) {
  return "(" + std::to_string(u + 1) + "," + std::to_string(a.head + 1) + ") length " +
         to_string(a.length);
}

}  // namespace

std::vector<VertexId> first_hops(const SsspOutput& out, VertexId source) {
  const std::size_t n = out.parent.size();
  std::vector<VertexId> hop(n, kNoVertex);
  std::vector<VertexId> chain;
  for (VertexId v = 0; v < n; ++v) {
    if (v == source || hop[v] != kNoVertex || out.parent[v] == kNoVertex) continue;
    // Climb until the parent is the source or a vertex already labelled.
    VertexId u = v;
    chain.clear();
    while (u != source && hop[u] == kNoVertex && out.parent[u] != source) {
      chain.push_back(u);
      u = out.parent[u];
      if (u == kNoVertex || chain.size() > n) throw InternalFault("parent array is not a tree");
    }
    VertexId label = (u == source) ? kNoVertex : (hop[u] != kNoVertex ? hop[u] : u);
    if (label == kNoVertex) throw InternalFault("parent array is not a tree");
    hop[u] = label;
    for (VertexId w : chain) hop[w] = label;
  }
  return hop;
}

SsspOutput dijkstra(const DigraphView& g, VertexId source) {
  const std::size_t n = g.num_vertices();
  SsspOutput out = empty_output(n, source);
  using Item = std::pair<Weight, VertexId>;
  auto later = [](const Item& a, const Item& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second > b.second;
  };
  std::priority_queue<Item, std::vector<Item>, decltype(later)> heap(later);
  std::vector<std::uint8_t> done(n, 0);
  heap.emplace(Weight::zero(), source);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (done[u]) continue;
    done[u] = 1;
    for (const OutArc& a : g.out(u)) {
      ++out.arcs_scanned;
      if (a.length < Weight::zero()) throw InputError("dijkstra: negative arc " + arc_name(u, a));
      Weight nd = d + a.length;
      if (nd < out.dist[a.head]) {
        out.dist[a.head] = nd;
        out.parent[a.head] = u;
        heap.emplace(nd, a.head);
      }
    }
  }
  out.first_hop = first_hops(out, source);
  return out;
}

SsspOutput dag_topo_sssp(const DigraphView& g, VertexId source) {
  SsspOutput out = empty_output(g.num_vertices(), source);
  const TopoOrder topo = topological_order(g);
  for (std::size_t i = topo.rank[source]; i < topo.order.size(); ++i) {
    VertexId u = topo.order[i];
    if (!out.dist[u].is_finite()) continue;
    for (const OutArc& a : g.out(u)) {
      ++out.arcs_scanned;
      Weight nd = out.dist[u] + a.length;
      if (nd < out.dist[a.head]) {
        out.dist[a.head] = nd;
        out.parent[a.head] = u;
      }
    }
  }
  out.first_hop = first_hops(out, source);
  return out;
}

SsspOutput bellman_ford(const DigraphView& g, VertexId source) {
  const std::size_t n = g.num_vertices();
  SsspOutput out = empty_output(n, source);
  VertexId last_relaxed = kNoVertex;
  for (std::size_t round = 0; round < n; ++round) {
    last_relaxed = kNoVertex;
    for (VertexId u = 0; u < n; ++u) {
      if (!out.dist[u].is_finite()) continue;
      for (const OutArc& a : g.out(u)) {
        ++out.arcs_scanned;
        Weight nd = out.dist[u] + a.length;
        if (nd < out.dist[a.head]) {
          out.dist[a.head] = nd;
          out.parent[a.head] = u;
          last_relaxed = a.head;
        }
      }
    }
    if (last_relaxed == kNoVertex) break;
  }
  if (last_relaxed != kNoVertex) {
    // A relaxation in round n means a reachable negative cycle; n parent
    // steps from the last relaxed vertex land on it.
    VertexId v = last_relaxed;
    for (std::size_t i = 0; i < n; ++i) v = out.parent[v];
    std::vector<VertexId> cycle{v};
    for (VertexId u = out.parent[v]; u != v; u = out.parent[u]) cycle.push_back(u);
    std::reverse(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
    std::string what = "negative cycle: " + format_cycle(cycle);
    throw NegativeCycleError(what, std::move(cycle));
  }
  out.first_hop = first_hops(out, source);
  return out;
}

std::unique_ptr<SsspEngine> make_engine(std::string_view name) {
  if (name == "dijkstra") return std::make_unique<DijkstraEngine>();
  if (name == "dag") return std::make_unique<DagEngine>();
  if (name == "bellman-ford") return std::make_unique<BellmanFordEngine>();
  throw InputError("unknown engine '" + std::string(name) + "' (dijkstra, dag, bellman-ford)");
}

}  // namespace bbapsp
