#pragma once

#include <cstddef>
#include <cstdint>

#include "bbapsp/graph.hpp"

namespace bbapsp {

// Closed integer interval arc lengths are drawn from.
struct WeightRange {
  std::int64_t min = 0;
  std::int64_t max = 100;
};

// Strongly connected digraph with exactly m arcs: a Hamiltonian cycle over a
// random permutation plus m - n distinct extra arcs. Requires n <= m <= n(n-1)
// (n = 1 only with m = 0) and a non-negative range.
Graph gen_random_digraph(std::size_t n, std::size_t m, WeightRange weights, std::uint64_t seed);

// DAG whose arcs all point from lower to higher rank in a random permutation.
// Requires m <= n(n-1)/2; negative lengths allowed.
Graph gen_random_dag(std::size_t n, std::size_t m, WeightRange weights, std::uint64_t seed);

// All n(n-1) arcs with i.i.d. lengths.
Graph gen_complete_digraph(std::size_t n, WeightRange weights, std::uint64_t seed);

// Directed cycle 1 -> 2 -> ... -> n -> 1.
Graph gen_cycle(std::size_t n, WeightRange weights, std::uint64_t seed);

// Weakly (but generally not strongly) connected digraph: a randomly oriented
// spanning tree plus m - (n-1) distinct extra arcs. Requires n-1 <= m <= n(n-1).
Graph gen_weakly_connected(std::size_t n, std::size_t m, WeightRange weights, std::uint64_t seed);

}  // namespace bbapsp
