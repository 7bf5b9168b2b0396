#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "bbapsp/errors.hpp"
#include "bbapsp/weight.hpp"

namespace bbapsp {

using ArcId = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr ArcId kNoArc = std::numeric_limits<ArcId>::max();

struct Arc {
  VertexId tail = 0;
  VertexId head = 0;
  Weight length;

  friend bool operator==(const Arc&, const Arc&) = default;
};

struct OutArc {
  VertexId head;
  Weight length;
  ArcId arc;
};

// Forward-star adjacency over a fixed arc list. This is the input type of
// every SSSP engine; arcs of infinite length are treated as absent and are
// dropped on construction.
class DigraphView {
 public:
  DigraphView() = default;
  static DigraphView from_arcs(std::size_t num_vertices, std::span<const Arc> arcs);

  std::size_t num_vertices() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_arcs() const noexcept { return out_.size(); }
  std::span<const OutArc> out(VertexId u) const noexcept {
    return {out_.data() + offsets_[u], out_.data() + offsets_[u + 1]};
  }

 private:
  std::vector<std::uint32_t> offsets_;
  std::vector<OutArc> out_;
};

struct BuildReport {
  std::size_t self_loops_dropped = 0;
  std::size_t parallel_merged = 0;
};

// Immutable simple digraph. Self-loops are dropped and parallel arcs are
// merged keeping the minimum length (at the position of the first copy), so
// arc ids are dense and stable.
class Graph {
 public:
  Graph() = default;

  static Graph build(std::size_t num_vertices, std::span<const Arc> arcs, bool allow_negative);

  std::size_t num_vertices() const noexcept { return num_vertices_; }
  std::size_t num_arcs() const noexcept { return arcs_.size(); }
  const Arc& arc(ArcId id) const noexcept { return arcs_[id]; }
  std::span<const Arc> arcs() const noexcept { return arcs_; }

  // Arcs with head `v`, in arc-id (insertion) order.
  std::span<const ArcId> incoming(VertexId v) const noexcept {
    return {in_arcs_.data() + in_offsets_[v], in_arcs_.data() + in_offsets_[v + 1]};
  }

  bool allows_negative() const noexcept { return allows_negative_; }
  bool has_negative_arc() const noexcept;
  const BuildReport& build_report() const noexcept { return report_; }
  const DigraphView& forward() const noexcept { return forward_; }

 private:
  std::size_t num_vertices_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::uint32_t> in_offsets_;
  std::vector<ArcId> in_arcs_;
  DigraphView forward_;
  BuildReport report_;
  bool allows_negative_ = false;
};

inline Graph build_graph(std::size_t num_vertices, std::span<const Arc> arcs,
                         bool allow_negative = false) {
  return Graph::build(num_vertices, arcs, allow_negative);
}

inline std::span<const ArcId> incoming_arcs(const Graph& g, VertexId v) {
  return g.incoming(v);
}

// Structural equality ignoring arc order.
bool same_arc_set(const Graph& a, const Graph& b);

}  // namespace bbapsp
