#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bbapsp/distance_matrix.hpp"
#include "bbapsp/driver.hpp"
#include "bbapsp/graph.hpp"

namespace bbapsp {

// O(n^3) dynamic program over intermediate vertices. Throws
// NegativeCycleError if a diagonal entry goes negative.
DistanceMatrix floyd_warshall(const Graph& g);

// n calls to bellman_ford.
DistanceMatrix bellman_ford_all_pairs(const Graph& g);

struct EssentialArcs {
  std::vector<ArcId> arcs;
  std::size_t count() const noexcept { return arcs.size(); }
};

// Arc (u,v) is essential iff d(s,u) + l(u,v) = d(s,v) for some s with finite
// d(s,u). Its count is m*.
EssentialArcs essential_edges(const Graph& g, const DistanceMatrix& dm);

struct Violation {
  std::string check;
  std::string witness;
};

struct VerificationReport {
  std::vector<Violation> violations;

  bool passed() const noexcept { return violations.empty(); }
  void add(std::string check, std::string witness) {
    violations.push_back({std::move(check), std::move(witness)});
  }
  void merge(const VerificationReport& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
};

// Throws InputError on a size mismatch.
VerificationReport verify_matrix(const DistanceMatrix& actual, const DistanceMatrix& expected);
inline VerificationReport verify_matrix(const ApspResult& result, const DistanceMatrix& expected) {
  return verify_matrix(result.matrix, expected);
}

// Per list: non-decreasing distances, distinct sources, each entry exact, and
// the inner distances equal (as a multiset) the finite oracle distances into
// the owner.
VerificationReport verify_sorted_lists(std::span<const PathList> lists, const DistanceMatrix& dm);

// psi_calls <= n-1 and peak_aux_arcs <= m*+n always; the improved variant
// additionally needs peak_active_cursors <= m*+n and cursor_advances <=
// (m*+n)n, the basic one cursor_advances <= mn.
VerificationReport verify_counters(const RunCounters& counters, const Graph& g,
                                   std::size_t mstar, Variant variant);

}  // namespace bbapsp
