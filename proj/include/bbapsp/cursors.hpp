#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bbapsp/graph.hpp"

namespace bbapsp {

// Incoming arcs of every vertex sorted by length, ties by arc id.
struct SortedIncidence {
  std::vector<std::vector<ArcId>> by_head;
  std::size_t comparisons = 0;

  std::span<const ArcId> of(VertexId v) const noexcept { return by_head[v]; }
};

SortedIncidence build_sorted_incidence(const Graph& g);

// Pointer p[(u,v)] into the tail's shortest-path list. A position equal to
// the list's current size denotes the end-of-list sentinel.
struct ArcCursor {
  ArcId arc = kNoArc;
  VertexId tail = kNoVertex;
  Weight length;
  std::uint32_t position = 0;
};

enum class CursorEventKind {
  // The probationary arc's first entry (its tail at distance = arc length)
  // was taken as a shortest path; the arc is now confirmed.
  kPromotion,
  // The probationary arc's first entry became non-viable before it was ever
  // used; the arc is not on any needed shortest path and is dropped.
  kRefutation,
};

struct CursorEvent {
  CursorEventKind kind;
  VertexId head;
  ArcId arc;
};

// Live cursors of every vertex.
//
// all_arcs(): one cursor per incoming arc, always live (basic driver).
//
// deferred(): per vertex, the cursors of confirmed arcs plus at most one
// probationary cursor on the cheapest unresolved arc. The next arc in sorted
// order is activated only once the probationary one is promoted or refuted,
// so at any time the number of live cursors is bounded by
// (confirmed arcs) + n.
class ActiveCursorSet {
 public:
  ActiveCursorSet() = default;

  static ActiveCursorSet all_arcs(const Graph& g);
  static ActiveCursorSet deferred(const Graph& g, SortedIncidence incidence);

  bool is_deferred() const noexcept { return deferred_; }
  std::size_t num_vertices() const noexcept { return per_vertex_.size(); }

  // Span is invalidated by resolve().
  std::span<ArcCursor> cursors(VertexId v) noexcept { return per_vertex_[v].cursors; }
  std::span<const ArcCursor> cursors(VertexId v) const noexcept { return per_vertex_[v].cursors; }

  // The probationary cursor, when present, is always the last one.
  std::optional<ArcId> probationary(VertexId v) const noexcept;
  std::size_t frontier_index(VertexId v) const noexcept { return per_vertex_[v].frontier; }
  std::size_t live() const noexcept { return live_; }

  // Applies one event and activates the next arc in sorted order, if any.
  // Throws InternalFault if `event.arc` is not the head's probationary arc.
  void resolve(const CursorEvent& event);

 private:
  struct PerVertex {
    std::vector<ArcCursor> cursors;
    bool has_probationary = false;
    std::size_t frontier = 0;
  };

  void activate_next(VertexId v);

  const Graph* graph_ = nullptr;
  SortedIncidence incidence_;
  std::vector<PerVertex> per_vertex_;
  std::size_t live_ = 0;
  bool deferred_ = false;
};

void resolve_and_activate(ActiveCursorSet& cursors, std::span<const CursorEvent> events);

}  // namespace bbapsp
