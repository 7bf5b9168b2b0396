#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bbapsp/cursors.hpp"
#include "bbapsp/distance_matrix.hpp"
#include "bbapsp/graph.hpp"
#include "bbapsp/sssp.hpp"

namespace bbapsp {

enum class Variant { kBasic, kImproved };

std::string_view to_string(Variant v) noexcept;
Variant parse_variant(std::string_view name);

// One element of a shortest-path list: `source` reaches the owning vertex at
// distance `dist`. The end-of-list sentinel (kNoVertex, +inf) is implicit.
struct PathEntry {
  VertexId source = kNoVertex;
  Weight dist = Weight::infinity();

  friend bool operator==(const PathEntry&, const PathEntry&) = default;
};

using PathList = std::vector<PathEntry>;

// Currently best viable candidate of a vertex. `dist` already includes the
// supplying arc's length.
struct BestChoice {
  VertexId source = kNoVertex;
  Weight dist = Weight::infinity();
  ArcId supplier_arc = kNoArc;
  bool supplier_was_first = false;

  friend bool operator==(const BestChoice&, const BestChoice&) = default;
};

struct RunCounters {
  std::uint64_t cursor_advances = 0;
  std::uint64_t viability_checks = 0;
  std::uint64_t psi_calls = 0;
  std::uint64_t psi_arcs_scanned = 0;
  std::uint64_t peak_aux_arcs = 0;       // n star arcs + promoted arcs
  std::uint64_t peak_active_cursors = 0;
  std::uint64_t promotions = 0;
  std::uint64_t refutations = 0;
  std::uint64_t tie_overrides = 0;       // first hops rewritten by normalize_ties
  std::uint64_t sort_comparisons = 0;
  std::uint64_t phases = 0;
  std::chrono::nanoseconds wall_time{0};
};

// Everything one run owns. The auxiliary graph has the n input vertices plus
// the extra source n; its arcs are the finite star arcs (n, v) of length
// star_lengths[v] and the promoted input arcs.
struct ApspState {
  const Graph* graph = nullptr;
  Variant variant = Variant::kBasic;
  std::vector<PathList> lists;
  ActiveCursorSet cursors;
  std::vector<std::uint8_t> solved;  // n x n, solved[v * n + a]
  std::vector<Weight> star_lengths;
  std::vector<ArcId> promoted;
  std::vector<std::uint8_t> is_promoted;
  std::vector<std::uint8_t> frozen;
  std::size_t phase = 0;
  RunCounters counters;

  std::size_t num_vertices() const noexcept { return lists.size(); }
  VertexId aux_source() const noexcept { return static_cast<VertexId>(lists.size()); }
  bool is_solved(VertexId v, VertexId source) const noexcept {
    return solved[static_cast<std::size_t>(v) * lists.size() + source] != 0;
  }
};

// Every S_v = [(v, 0)], all star arcs at +inf, nothing promoted. Throws
// InputError for graphs with negative arcs.
ApspState init_state(const Graph& g, Variant variant);

// Advances each live cursor of every non-frozen vertex past non-viable
// entries and picks the minimum candidate by (dist, source, arc). Sets
// star_lengths. In the deferred discipline a probationary cursor whose first
// entry is already solved is refuted and its successor examined in the same
// pass.
std::vector<BestChoice> reload_phase(ApspState& st, const Graph& g);

// Auxiliary graph for the current phase.
DigraphView aux_graph_view(const ApspState& st);

struct PsiOptions {
  // Run an acyclicity check on every auxiliary graph (InternalFault if not).
  bool check_aux_acyclic = false;
};

// One engine call on the auxiliary graph, normalized with normalize_ties.
SsspOutput run_psi_phase(ApspState& st, const SsspEngine& engine, const PsiOptions& options = {});

// Makes a tie between the direct star arc and a composite path resolve to the
// star arc: every v with dist[v] == star[v] is re-parented onto the auxiliary
// source and first hops are recomputed, so v and its tree descendants carry
// v's own candidate. Throws InternalFault if dist[v] > star[v] for a finite
// star arc. The auxiliary source is vertex star_lengths.size().
SsspOutput normalize_ties(SsspOutput out, std::span<const Weight> star_lengths,
                          std::uint64_t* overrides = nullptr);

// Appends the engine results to the lists, freezes vertices it could not reach, and
// promotes arcs whose tail was taken directly at distance = arc length.
void propagate_phase(ApspState& st, std::span<const BestChoice> best, const SsspOutput& out);

struct PhaseTrace {
  std::size_t phase;
  std::span<const BestChoice> best;
  std::span<const Weight> star_lengths;
  const SsspOutput* psi;  // normalized; null when the phase skipped the engine call
  const ApspState& state;  // after propagation
  std::span<const ArcId> promoted_now;
};

using PhaseObserver = std::function<void(const PhaseTrace&)>;

struct SolveOptions {
  PsiOptions psi;
  PhaseObserver observer;
};

struct ApspResult {
  std::size_t n = 0;
  Variant variant = Variant::kBasic;
  std::string engine;
  std::vector<PathList> lists;  // lists[v] starts with (v, 0)
  DistanceMatrix matrix;
  RunCounters counters;
  // Johnson potentials when produced by the DAG pipeline; empty otherwise.
  std::vector<Weight> potentials;
};

DistanceMatrix matrix_from_lists(std::span<const PathList> lists);

// Runs up to n-1 reload / engine call / propagate phases, stopping early once every
// vertex is frozen.
ApspResult solve_apsp(const Graph& g, const SsspEngine& engine, Variant variant,
                      const SolveOptions& options = {});

}  // namespace bbapsp
