#include "bbapsp/graph.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "bbapsp/distance_matrix.hpp"

namespace bbapsp {

DigraphView DigraphView::from_arcs(std::size_t num_vertices, std::span<const Arc> arcs) {
  DigraphView view;
  view.offsets_.assign(num_vertices + 1, 0);
  for (const Arc& a : arcs) {
    if (a.length.is_finite()) ++view.offsets_[a.tail + 1];
  }
  for (std::size_t v = 0; v < num_vertices; ++v) view.offsets_[v + 1] += view.offsets_[v];
  view.out_.resize(view.offsets_.back());
  std::vector<std::uint32_t> fill(view.offsets_.begin(), view.offsets_.end() - 1);
  for (std::size_t id = 0; id < arcs.size(); ++id) {
    const Arc& a = arcs[id];
    if (!a.length.is_finite()) continue;
    view.out_[fill[a.tail]++] = OutArc{a.head, a.length, static_cast<ArcId>(id)};
  }
  return view;
}

Graph Graph::build(std::size_t num_vertices, std::span<const Arc> arcs, bool allow_negative) {
  if (num_vertices == 0) throw InputError("graph needs at least one vertex");
  if (num_vertices >= kNoVertex) throw InputError("too many vertices");

  Graph g;
  g.num_vertices_ = num_vertices;
  g.allows_negative_ = allow_negative;

  std::unordered_map<std::uint64_t, ArcId> seen;
  seen.reserve(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const Arc& a = arcs[i];
    const std::string where = "arc #" + std::to_string(i + 1) + " (" + std::to_string(a.tail + 1) +
                              "," + std::to_string(a.head + 1) + ")";
    if (a.tail >= num_vertices || a.head >= num_vertices) {
      throw InputError(where + ": endpoint out of range [1," + std::to_string(num_vertices) + "]");
    }
    if (!a.length.is_finite()) throw InputError(where + ": length must be finite");
    if (a.length < Weight::zero() && !allow_negative) {
      throw InputError(where + ": negative length " + to_string(a.length));
    }
    if (a.tail == a.head) {
      ++g.report_.self_loops_dropped;
      continue;
    }
    const std::uint64_t key = (static_cast<std::uint64_t>(a.tail) << 32) | a.head;
    auto [it, inserted] = seen.try_emplace(key, static_cast<ArcId>(g.arcs_.size()));
    if (inserted) {
      g.arcs_.push_back(a);
    } else {
      ++g.report_.parallel_merged;
      Arc& kept = g.arcs_[it->second];
      kept.length = std::min(kept.length, a.length);
    }
  }
  if (g.arcs_.size() >= kNoArc) throw InputError("too many arcs");

  g.in_offsets_.assign(num_vertices + 1, 0);
  for (const Arc& a : g.arcs_) ++g.in_offsets_[a.head + 1];
  for (std::size_t v = 0; v < num_vertices; ++v) g.in_offsets_[v + 1] += g.in_offsets_[v];
  g.in_arcs_.resize(g.arcs_.size());
  std::vector<std::uint32_t> fill(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
  for (ArcId id = 0; id < g.arcs_.size(); ++id) g.in_arcs_[fill[g.arcs_[id].head]++] = id;

  g.forward_ = DigraphView::from_arcs(num_vertices, g.arcs_);
  return g;
}

bool Graph::has_negative_arc() const noexcept {
  return std::any_of(arcs_.begin(), arcs_.end(),
                     [](const Arc& a) { return a.length < Weight::zero(); });
}

bool same_arc_set(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_arcs() != b.num_arcs()) return false;
  auto sorted = [](const Graph& g) {
    std::vector<Arc> arcs(g.arcs().begin(), g.arcs().end());
    std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) {
      return std::tie(x.tail, x.head) < std::tie(y.tail, y.head);
    });
    return arcs;
  };
  return sorted(a) == sorted(b);
}

DistanceMatrix::DistanceMatrix(std::size_t n) : n_(n), data_(n * n, Weight::infinity()) {
  for (std::size_t v = 0; v < n; ++v) data_[v * n + v] = Weight::zero();
}

}  // namespace bbapsp
