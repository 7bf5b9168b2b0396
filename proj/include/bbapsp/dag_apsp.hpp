#pragma once

#include <vector>

#include "bbapsp/driver.hpp"
#include "bbapsp/graph.hpp"
#include "bbapsp/topo.hpp"

namespace bbapsp {

// Throws CycleError; the witness follows incoming arcs in insertion order.
TopoOrder topo_order(const Graph& g);

struct Reweighting {
  Graph graph;                    // same arcs, lengths l(u,v) + h(u) - h(v) >= 0
  std::vector<Weight> potentials; // h
};

// Potentials are distances from an implicit super-source with zero-length
// arcs to every vertex (so h <= 0), computed in one topological pass.
Reweighting johnson_reweight(const Graph& g);

struct DagSolveOptions {
  Variant variant = Variant::kImproved;
  const SsspEngine* engine = nullptr;  // defaults to DagEngine
  SolveOptions solve;
};

// Reweight, solve on the reweighted graph, then map every finite distance back
// with d(u,v) = d'(u,v) - h(u) + h(v). List entries are mapped the same way,
// so lists are ordered by reweighted distance.
ApspResult solve_dag_apsp(const Graph& g, const DagSolveOptions& options = {});

// Maps un-reweighted list entries back to reweighted distances,
// d'(a,v) = d(a,v) + h(a) - h(v), under which they are sorted again.
std::vector<PathList> reweight_lists(std::span<const PathList> lists, std::span<const Weight> potentials);

}  // namespace bbapsp
