#include "bbapsp/driver.hpp"

#include <algorithm>
#include <string>

#include "bbapsp/topo.hpp"

namespace bbapsp {
namespace {

std::string vname(VertexId v) { return std::to_string(v + 1); }

bool better(const BestChoice& a, const BestChoice& b) {
  if (a.dist != b.dist) return a.dist < b.dist;
  if (a.source != b.source) return a.source < b.source;
  return a.supplier_arc < b.supplier_arc;
}

void mark_solved(ApspState& st, VertexId v, VertexId source) {
  st.solved[static_cast<std::size_t>(v) * st.num_vertices() + source] = 1;
}

void update_peaks(ApspState& st) {
  auto& c = st.counters;
  c.peak_aux_arcs = std::max<std::uint64_t>(c.peak_aux_arcs, st.num_vertices() + st.promoted.size());
  c.peak_active_cursors = std::max<std::uint64_t>(c.peak_active_cursors, st.cursors.live());
}

}  // namespace

std::string_view to_string(Variant v) noexcept {
  return v == Variant::kBasic ? "basic" : "improved";
}

Variant parse_variant(std::string_view name) {
  if (name == "basic") return Variant::kBasic;
  if (name == "improved") return Variant::kImproved;
  throw InputError("unknown variant '" + std::string(name) + "' (basic, improved)");
}

ApspState init_state(const Graph& g, Variant variant) {
  if (g.has_negative_arc()) {
    throw InputError("graph has negative arcs; use the DAG pipeline");
  }
  const std::size_t n = g.num_vertices();
  ApspState st;
  st.graph = &g;
  st.variant = variant;
  st.lists.resize(n);
  st.solved.assign(n * n, 0);
  for (VertexId v = 0; v < n; ++v) {
    st.lists[v].push_back(PathEntry{v, Weight::zero()});
    mark_solved(st, v, v);
  }
  if (variant == Variant::kImproved) {
    SortedIncidence inc = build_sorted_incidence(g);
    st.counters.sort_comparisons = inc.comparisons;
    st.cursors = ActiveCursorSet::deferred(g, std::move(inc));
  } else {
    st.cursors = ActiveCursorSet::all_arcs(g);
  }
  st.star_lengths.assign(n, Weight::infinity());
  st.is_promoted.assign(g.num_arcs(), 0);
  st.frozen.assign(n, 0);
  update_peaks(st);
  return st;
}

std::vector<BestChoice> reload_phase(ApspState& st, [[maybe_unused]] const Graph& g) {
  const std::size_t n = st.num_vertices();
  auto& counters = st.counters;
  std::vector<BestChoice> best(n);
  for (VertexId v = 0; v < n; ++v) {
    if (st.frozen[v]) {
      st.star_lengths[v] = Weight::infinity();
      continue;
    }
    BestChoice& b = best[v];
    auto cursors = st.cursors.cursors(v);
    for (std::size_t i = 0; i < cursors.size();) {
      ArcCursor& c = cursors[i];
      const PathList& supply = st.lists[c.tail];
      const bool probationary = i + 1 == cursors.size() && st.cursors.probationary(v) == c.arc;
      if (probationary) {
        // Never advanced: it either stays at its tail's own entry or is dropped.
        ++counters.viability_checks;
        if (st.is_solved(v, supply.front().source)) {
          ++counters.refutations;
          st.cursors.resolve(CursorEvent{CursorEventKind::kRefutation, v, c.arc});
          cursors = st.cursors.cursors(v);
          continue;
        }
      } else {
        while (c.position < supply.size()) {
          ++counters.viability_checks;
          if (!st.is_solved(v, supply[c.position].source)) break;
          ++c.position;
          ++counters.cursor_advances;
        }
      }
      if (c.position < supply.size()) {
        const PathEntry& e = supply[c.position];
        BestChoice candidate{e.source, e.dist + c.length, c.arc, c.position == 0};
        if (better(candidate, b)) b = candidate;
      }
      ++i;
    }
    st.star_lengths[v] = b.dist;
  }
  update_peaks(st);
  return best;
}

DigraphView aux_graph_view(const ApspState& st) {
  const std::size_t n = st.num_vertices();
  const VertexId aux = st.aux_source();
  std::vector<Arc> arcs;
  arcs.reserve(n + st.promoted.size());
  for (VertexId v = 0; v < n; ++v) {
    if (st.star_lengths[v].is_finite()) arcs.push_back(Arc{aux, v, st.star_lengths[v]});
  }
  for (ArcId id : st.promoted) arcs.push_back(st.graph->arc(id));
  return DigraphView::from_arcs(n + 1, arcs);
}

SsspOutput normalize_ties(SsspOutput out, std::span<const Weight> star_lengths,
                          std::uint64_t* overrides) {
  const auto aux = static_cast<VertexId>(star_lengths.size());
  bool rerouted = false;
  for (VertexId v = 0; v < star_lengths.size(); ++v) {
    const Weight star = star_lengths[v];
    if (!star.is_finite()) continue;
    if (out.dist[v] > star) {
      throw InternalFault("psi returned " + to_string(out.dist[v]) + " for vertex " + vname(v) +
                          " but its direct arc has length " + to_string(star));
    }
    if (out.dist[v] == star && out.parent[v] != aux) {
      out.parent[v] = aux;
      rerouted = true;
      if (overrides) ++*overrides;
    }
  }
  if (rerouted) out.first_hop = first_hops(out, aux);
  return out;
}

SsspOutput run_psi_phase(ApspState& st, const SsspEngine& engine, const PsiOptions& options) {
  const DigraphView view = aux_graph_view(st);
  if (options.check_aux_acyclic && !is_acyclic(view)) {
    throw InternalFault("auxiliary graph of phase " + std::to_string(st.phase) + " has a cycle");
  }
  SsspOutput raw = engine.solve(view, st.aux_source());
  ++st.counters.psi_calls;
  st.counters.psi_arcs_scanned += raw.arcs_scanned;
  return normalize_ties(std::move(raw), st.star_lengths, &st.counters.tie_overrides);
}

void propagate_phase(ApspState& st, std::span<const BestChoice> best, const SsspOutput& out) {
  const std::size_t n = st.num_vertices();
  for (VertexId v = 0; v < n; ++v) {
    if (st.frozen[v]) continue;
    if (!out.dist[v].is_finite()) {
      st.frozen[v] = 1;
      st.star_lengths[v] = Weight::infinity();
      continue;
    }
    const VertexId hop = out.first_hop[v];
    if (hop == kNoVertex || best[hop].source == kNoVertex) {
      throw InternalFault("vertex " + vname(v) + " reached without a carrying candidate");
    }
    const VertexId source = best[hop].source;
    PathList& list = st.lists[v];
    if (st.is_solved(v, source)) {
      throw InternalFault("source " + vname(source) + " would appear twice in the list of vertex " +
                          vname(v));
    }
    if (out.dist[v] < list.back().dist) {
      throw InternalFault("list of vertex " + vname(v) + " would lose its ordering");
    }
    list.push_back(PathEntry{source, out.dist[v]});
    mark_solved(st, v, source);

    const BestChoice& own = best[v];
    if (hop == v && own.supplier_was_first && !st.is_promoted[own.supplier_arc]) {
      st.is_promoted[own.supplier_arc] = 1;
      st.promoted.push_back(own.supplier_arc);
      ++st.counters.promotions;
      if (st.cursors.is_deferred()) {
        st.cursors.resolve(CursorEvent{CursorEventKind::kPromotion, v, own.supplier_arc});
      }
    }
  }
  update_peaks(st);
}

DistanceMatrix matrix_from_lists(std::span<const PathList> lists) {
  DistanceMatrix dm(lists.size());
  for (VertexId v = 0; v < lists.size(); ++v) {
    for (const PathEntry& e : lists[v]) dm.set(e.source, v, e.dist);
  }
  return dm;
}

ApspResult solve_apsp(const Graph& g, const SsspEngine& engine, Variant variant,
                      const SolveOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  if (engine.requirement() == InputRequirement::kAcyclic) topological_order(g.forward());

  ApspState st = init_state(g, variant);
  const std::size_t n = g.num_vertices();
  std::size_t frozen = 0;
  for (std::size_t k = 1; k < n && frozen < n; ++k) {
    std::vector<BestChoice> best = reload_phase(st, g);
    ++st.phase;
    ++st.counters.phases;
    const std::size_t promoted_before = st.promoted.size();

    const bool any_star = std::any_of(st.star_lengths.begin(), st.star_lengths.end(),
                                      [](Weight w) { return w.is_finite(); });
    if (!any_star) {
      // The auxiliary source has no arcs, so the engine could only report +inf.
      std::fill(st.frozen.begin(), st.frozen.end(), 1);
      frozen = n;
      if (options.observer) {
        options.observer(PhaseTrace{st.phase, best, st.star_lengths, nullptr, st, {}});
      }
      break;
    }

    SsspOutput out = run_psi_phase(st, engine, options.psi);
    const std::vector<Weight> star_used = st.star_lengths;
    propagate_phase(st, best, out);
    frozen = static_cast<std::size_t>(std::count(st.frozen.begin(), st.frozen.end(), 1));
    if (options.observer) {
      std::span<const ArcId> now(st.promoted.data() + promoted_before,
                                 st.promoted.size() - promoted_before);
      options.observer(PhaseTrace{st.phase, best, star_used, &out, st, now});
    }
  }

  ApspResult result;
  result.n = n;
  result.variant = variant;
  result.engine = std::string(engine.name());
  result.matrix = matrix_from_lists(st.lists);
  result.lists = std::move(st.lists);
  result.counters = st.counters;
  result.counters.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - started);
  return result;
}

}  // namespace bbapsp
