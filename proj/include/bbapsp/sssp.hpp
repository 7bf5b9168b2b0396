#pragma once

#include <cstddef>
#include <memory>
#include <string_view>
#include <vector>

#include "bbapsp/graph.hpp"

namespace bbapsp {

// Result of one single-source run. `parent` is a shortest-path tree (kNoVertex
// at the source and at unreachable vertices). `first_hop[v]` is the vertex
// right after the source on the tree path to v, v itself when the path is a
// single arc, kNoVertex when v is the source or unreachable.
struct SsspOutput {
  std::vector<Weight> dist;
  std::vector<VertexId> parent;
  std::vector<VertexId> first_hop;
  std::size_t arcs_scanned = 0;

  friend bool operator==(const SsspOutput&, const SsspOutput&) = default;
};

enum class InputRequirement { kNonNegative, kAcyclic, kAnyWeights };

// A black-box single-source solver. Implementations must be pure: repeated
// solve() calls on the same view and source return identical outputs.
class SsspEngine {
 public:
  virtual ~SsspEngine() = default;
  virtual std::string_view name() const noexcept = 0;
  virtual InputRequirement requirement() const noexcept = 0;
  virtual SsspOutput solve(const DigraphView& g, VertexId source) const = 0;
};

// Binary-heap Dijkstra. Equal keys pop in ascending vertex order. Throws
// InputError on a negative arc.
SsspOutput dijkstra(const DigraphView& g, VertexId source);

// One relaxation pass in topological order. Throws CycleError if the view
// has a cycle; negative lengths are fine.
SsspOutput dag_topo_sssp(const DigraphView& g, VertexId source);

// Throws NegativeCycleError (with a witness) if a negative cycle is reachable
// from the source.
SsspOutput bellman_ford(const DigraphView& g, VertexId source);

inline SsspOutput dijkstra(const Graph& g, VertexId s) { return dijkstra(g.forward(), s); }
inline SsspOutput dag_topo_sssp(const Graph& g, VertexId s) { return dag_topo_sssp(g.forward(), s); }
inline SsspOutput bellman_ford(const Graph& g, VertexId s) { return bellman_ford(g.forward(), s); }

// Depth-1 ancestors below `source` in the parent tree.
std::vector<VertexId> first_hops(const SsspOutput& out, VertexId source);

class DijkstraEngine final : public SsspEngine {
 public:
  std::string_view name() const noexcept override { return "dijkstra"; }
  InputRequirement requirement() const noexcept override { return InputRequirement::kNonNegative; }
  SsspOutput solve(const DigraphView& g, VertexId source) const override {
    return dijkstra(g, source);
  }
};

class DagEngine final : public SsspEngine {
 public:
  std::string_view name() const noexcept override { return "dag"; }
  InputRequirement requirement() const noexcept override { return InputRequirement::kAcyclic; }
  SsspOutput solve(const DigraphView& g, VertexId source) const override {
    return dag_topo_sssp(g, source);
  }
};

class BellmanFordEngine final : public SsspEngine {
 public:
  std::string_view name() const noexcept override { return "bellman-ford"; }
  InputRequirement requirement() const noexcept override { return InputRequirement::kAnyWeights; }
  SsspOutput solve(const DigraphView& g, VertexId source) const override {
    return bellman_ford(g, source);
  }
};

// "dijkstra" | "dag" | "bellman-ford"; anything else is an InputError.
std::unique_ptr<SsspEngine> make_engine(std::string_view name);

}  // namespace bbapsp
