#include "bbapsp/cursors.hpp"

#include <algorithm>
#include <string>

namespace bbapsp {

SortedIncidence build_sorted_incidence(const Graph& g) {
  SortedIncidence inc;
  inc.by_head.resize(g.num_vertices());
  std::size_t comparisons = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto in = g.incoming(v);
    auto& list = inc.by_head[v];
    list.assign(in.begin(), in.end());
    std::sort(list.begin(), list.end(), [&](ArcId a, ArcId b) {
      ++comparisons;
      const Weight la = g.arc(a).length;
      const Weight lb = g.arc(b).length;
      if (la != lb) return la < lb;
      return a < b;
    });
  }
  inc.comparisons = comparisons;
  return inc;
}

ActiveCursorSet ActiveCursorSet::all_arcs(const Graph& g) {
  ActiveCursorSet set;
  set.graph_ = &g;
  set.per_vertex_.resize(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto& pv = set.per_vertex_[v];
    for (ArcId id : g.incoming(v)) {
      const Arc& a = g.arc(id);
      pv.cursors.push_back(ArcCursor{id, a.tail, a.length, 0});
    }
    pv.frontier = pv.cursors.size();
    set.live_ += pv.cursors.size();
  }
  return set;
}

ActiveCursorSet ActiveCursorSet::deferred(const Graph& g, SortedIncidence incidence) {
  ActiveCursorSet set;
  set.graph_ = &g;
  set.deferred_ = true;
  set.incidence_ = std::move(incidence);
  set.per_vertex_.resize(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) set.activate_next(v);
  return set;
}

std::optional<ArcId> ActiveCursorSet::probationary(VertexId v) const noexcept {
  const auto& pv = per_vertex_[v];
  if (!pv.has_probationary) return std::nullopt;
  return pv.cursors.back().arc;
}

void ActiveCursorSet::activate_next(VertexId v) {
  auto& pv = per_vertex_[v];
  auto sorted = incidence_.of(v);
  if (pv.frontier >= sorted.size()) return;
  const ArcId id = sorted[pv.frontier++];
  const Arc& a = graph_->arc(id);
  pv.cursors.push_back(ArcCursor{id, a.tail, a.length, 0});
  pv.has_probationary = true;
  ++live_;
}

void ActiveCursorSet::resolve(const CursorEvent& event) {
  auto& pv = per_vertex_.at(event.head);
  if (!pv.has_probationary || pv.cursors.back().arc != event.arc) {
    throw InternalFault("cursor event for arc " + std::to_string(event.arc) +
                        " which is not the probationary arc of vertex " +
                        std::to_string(event.head + 1));
  }
  pv.has_probationary = false;
  if (event.kind == CursorEventKind::kRefutation) {
    pv.cursors.pop_back();
    --live_;
  }
  activate_next(event.head);
}

void resolve_and_activate(ActiveCursorSet& cursors, std::span<const CursorEvent> events) {
  for (const CursorEvent& e : events) cursors.resolve(e);
}

}  // namespace bbapsp
