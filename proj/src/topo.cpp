#include "bbapsp/topo.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace bbapsp {
namespace {

// Every vertex left over by Kahn's algorithm has a left-over predecessor, so
// walking predecessors must revisit a vertex. Predecessors are taken in
// arc-id order.
std::vector<VertexId> find_cycle(const DigraphView& g, const std::vector<std::uint32_t>& indegree) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<std::pair<ArcId, VertexId>>> preds(n);
  for (VertexId u = 0; u < n; ++u) {
    if (indegree[u] == 0) continue;
    for (const OutArc& a : g.out(u)) {
      if (indegree[a.head] != 0) preds[a.head].emplace_back(a.arc, u);
    }
  }
  for (auto& p : preds) std::sort(p.begin(), p.end());

  VertexId start = 0;
  while (indegree[start] == 0) ++start;

  std::vector<std::uint32_t> seen_at(n, UINT32_MAX);
  std::vector<VertexId> walk;
  VertexId v = start;
  while (seen_at[v] == UINT32_MAX) {
    seen_at[v] = static_cast<std::uint32_t>(walk.size());
    walk.push_back(v);
    v = preds[v].front().second;
  }
  // walk[seen_at[v]..] is the cycle traversed backwards.
  std::vector<VertexId> cycle(walk.begin() + seen_at[v], walk.end());
  std::reverse(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  return cycle;
}

}  // namespace

TopoOrder topological_order(const DigraphView& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint32_t> indegree(n, 0);
  for (VertexId u = 0; u < n; ++u) {
    for (const OutArc& a : g.out(u)) ++indegree[a.head];
  }
  TopoOrder topo;
  topo.order.reserve(n);
  std::deque<VertexId> ready;
  for (VertexId v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  while (!ready.empty()) {
    VertexId u = ready.front();
    ready.pop_front();
    topo.order.push_back(u);
    for (const OutArc& a : g.out(u)) {
      if (--indegree[a.head] == 0) ready.push_back(a.head);
    }
  }
  if (topo.order.size() != n) {
    auto cycle = find_cycle(g, indegree);
    std::string what = "graph has a cycle: " + format_cycle(cycle);
    throw CycleError(what, std::move(cycle));
  }
  topo.rank.resize(n);
  for (std::size_t i = 0; i < n; ++i) topo.rank[topo.order[i]] = static_cast<std::uint32_t>(i);
  return topo;
}

bool is_acyclic(const DigraphView& g) {
  try {
    topological_order(g);
    return true;
  } catch (const CycleError&) {
    return false;
  }
}

}  // namespace bbapsp
