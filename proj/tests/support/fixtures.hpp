#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "bbapsp/graph.hpp"
#include "bbapsp/sssp.hpp"

namespace bbapsp::testing {

inline std::string data_path(const std::string& name) {
  return std::string(BBAPSP_TEST_DATA) + "/" + name;
}

inline Weight w(double x) { return Weight(x); }
inline Weight inf() { return Weight::infinity(); }

// Vertices {1,2,3}: 1->2 (1), 2->3 (2), 3->1 (4), 1->3 (5).
inline Graph fixture_k() {
  std::vector<Arc> arcs{{0, 1, w(1)}, {1, 2, w(2)}, {2, 0, w(4)}, {0, 2, w(5)}};
  return Graph::build(3, arcs, false);
}

// Vertices {1,2,3}: 1->2 (-2), 2->3 (3), 1->3 (2).
inline Graph fixture_d() {
  std::vector<Arc> arcs{{0, 1, w(-2)}, {1, 2, w(3)}, {0, 2, w(2)}};
  return Graph::build(3, arcs, true);
}

inline Graph single_vertex() { return Graph::build(1, std::vector<Arc>{}, false); }

inline Graph path_graph() {
  std::vector<Arc> arcs{{0, 1, w(1)}, {1, 2, w(1)}};
  return Graph::build(3, arcs, false);
}

inline ArcId find_arc(const Graph& g, VertexId tail, VertexId head) {
  for (ArcId id = 0; id < g.num_arcs(); ++id) {
    if (g.arc(id).tail == tail && g.arc(id).head == head) return id;
  }
  return kNoArc;
}

// Strongly connected component count, Tarjan, recursive (test graphs are small).
inline std::size_t scc_count(const DigraphView& g) {
  const std::size_t n = g.num_vertices();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<VertexId> stack;
  int next = 0;
  std::size_t count = 0;
  std::function<void(VertexId)> visit = [&](VertexId v) {
    index[v] = low[v] = next++;
    stack.push_back(v);
    on_stack[v] = 1;
    for (const OutArc& a : g.out(v)) {
      if (index[a.head] < 0) {
        visit(a.head);
        low[v] = std::min(low[v], low[a.head]);
      } else if (on_stack[a.head]) {
        low[v] = std::min(low[v], index[a.head]);
      }
    }
    if (low[v] == index[v]) {
      ++count;
      VertexId u;
      do {
        u = stack.back();
        stack.pop_back();
        on_stack[u] = 0;
      } while (u != v);
    }
  };
  for (VertexId v = 0; v < n; ++v) {
    if (index[v] < 0) visit(v);
  }
  return count;
}

// A valid but hostile engine: exact distances, but every vertex hangs off the
// last-settled tight predecessor, so equal-length composite paths win over
// direct arcs from the source whenever one exists.
class TieAdversaryEngine final : public SsspEngine {
 public:
  std::string_view name() const noexcept override { return "tie-adversary"; }
  InputRequirement requirement() const noexcept override { return InputRequirement::kNonNegative; }

  SsspOutput solve(const DigraphView& g, VertexId source) const override {
    SsspOutput base = dijkstra(g, source);
    const std::size_t n = g.num_vertices();
    std::vector<VertexId> settled;
    for (VertexId v = 0; v < n; ++v) {
      if (base.dist[v].is_finite()) settled.push_back(v);
    }
    // Any order consistent with the original tree keeps the new tree acyclic.
    std::vector<std::size_t> depth(n, 0);
    for (VertexId v : settled) {
      for (VertexId u = base.parent[v]; u != kNoVertex; u = base.parent[u]) ++depth[v];
    }
    std::stable_sort(settled.begin(), settled.end(), [&](VertexId a, VertexId b) {
      if (base.dist[a] != base.dist[b]) return base.dist[a] < base.dist[b];
      return depth[a] < depth[b];
    });
    std::vector<std::size_t> rank(n, n);
    for (std::size_t i = 0; i < settled.size(); ++i) rank[settled[i]] = i;

    SsspOutput out = base;
    for (VertexId u : settled) {
      for (const OutArc& a : g.out(u)) {
        const VertexId v = a.head;
        if (v == source || rank[u] >= rank[v]) continue;
        if (base.dist[u] + a.length != base.dist[v]) continue;
        if (out.parent[v] == kNoVertex || out.parent[v] == source || rank[u] > rank[out.parent[v]]) {
          out.parent[v] = u;
        }
      }
    }
    out.first_hop = first_hops(out, source);
    return out;
  }
};

}  // namespace bbapsp::testing
