#pragma once

#include <cstdint>
#include <vector>

#include "bbapsp/graph.hpp"

namespace bbapsp {

struct TopoOrder {
  std::vector<VertexId> order;
  std::vector<std::uint32_t> rank;  // inverse of `order`
};

// Kahn's algorithm, ties broken FIFO from ascending vertex id. Throws
// CycleError with a witness cycle when the view is not acyclic.
TopoOrder topological_order(const DigraphView& g);

bool is_acyclic(const DigraphView& g);

}  // namespace bbapsp
