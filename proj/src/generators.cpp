#include "bbapsp/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

namespace bbapsp {
namespace {

using Rng = std::mt19937_64;

void check_range(WeightRange w, bool allow_negative) {
  if (w.min > w.max) throw InputError("weight range is empty");
  if (!allow_negative && w.min < 0) throw InputError("weight range must be non-negative");
}

Weight draw(Rng& rng, WeightRange w) {
  std::uniform_int_distribution<std::int64_t> dist(w.min, w.max);
  return Weight(static_cast<double>(dist(rng)));
}

std::uint64_t key(VertexId u, VertexId v) { return (static_cast<std::uint64_t>(u) << 32) | v; }

// Adds `extra` distinct ordered pairs (u != v) not yet in `taken`, choosing
// uniformly. `allowed` filters candidate pairs (e.g. rank order for DAGs).
template <typename Allowed>
void add_random_pairs(std::size_t n, std::size_t extra, std::size_t capacity, Rng& rng,
                      std::unordered_set<std::uint64_t>& taken,
                      std::vector<std::pair<VertexId, VertexId>>& out, Allowed allowed) {
  if (extra == 0) return;
  if (2 * extra >= capacity) {
    std::vector<std::pair<VertexId, VertexId>> pool;
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = 0; v < n; ++v) {
        if (u != v && allowed(u, v) && !taken.contains(key(u, v))) pool.emplace_back(u, v);
      }
    }
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(extra);
    for (auto [u, v] : pool) taken.insert(key(u, v));
    out.insert(out.end(), pool.begin(), pool.end());
    return;
  }
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
  while (extra > 0) {
    VertexId u = pick(rng);
    VertexId v = pick(rng);
    if (u == v || !allowed(u, v) || !taken.insert(key(u, v)).second) continue;
    out.emplace_back(u, v);
    --extra;
  }
}

Graph assemble(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& pairs,
               WeightRange w, Rng& rng, bool allow_negative) {
  std::vector<Arc> arcs;
  arcs.reserve(pairs.size());
  for (auto [u, v] : pairs) arcs.push_back(Arc{u, v, draw(rng, w)});
  return Graph::build(n, arcs, allow_negative);
}

std::vector<VertexId> permutation(std::size_t n, Rng& rng) {
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), VertexId{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace

Graph gen_random_digraph(std::size_t n, std::size_t m, WeightRange weights, std::uint64_t seed) {
  check_range(weights, false);
  if (n == 0) throw InputError("n must be at least 1");
  const std::size_t capacity = n * (n - 1);
  if (m > capacity) {
    throw InputError("m = " + std::to_string(m) + " exceeds n(n-1) = " + std::to_string(capacity));
  }
  if (n > 1 && m < n) throw InputError("strong connectivity needs m >= n");

  Rng rng(seed);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::unordered_set<std::uint64_t> taken;
  if (n > 1) {
    auto perm = permutation(n, rng);
    for (std::size_t i = 0; i < n; ++i) {
      VertexId u = perm[i];
      VertexId v = perm[(i + 1) % n];
      if (taken.insert(key(u, v)).second) pairs.emplace_back(u, v);
    }
  }
  add_random_pairs(n, m - pairs.size(), capacity - pairs.size(), rng, taken, pairs,
                   [](VertexId, VertexId) { return true; });
  return assemble(n, pairs, weights, rng, false);
}

Graph gen_random_dag(std::size_t n, std::size_t m, WeightRange weights, std::uint64_t seed) {
  check_range(weights, true);
  if (n == 0) throw InputError("n must be at least 1");
  const std::size_t capacity = n * (n - 1) / 2;
  if (m > capacity) {
    throw InputError("m = " + std::to_string(m) + " exceeds n(n-1)/2 = " + std::to_string(capacity));
  }
  Rng rng(seed);
  auto perm = permutation(n, rng);
  std::vector<std::uint32_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[perm[i]] = static_cast<std::uint32_t>(i);

  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::unordered_set<std::uint64_t> taken;
  add_random_pairs(n, m, capacity, rng, taken, pairs,
                   [&](VertexId u, VertexId v) { return rank[u] < rank[v]; });
  return assemble(n, pairs, weights, rng, true);
}

Graph gen_complete_digraph(std::size_t n, WeightRange weights, std::uint64_t seed) {
  check_range(weights, false);
  if (n == 0) throw InputError("n must be at least 1");
  Rng rng(seed);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(n * (n - 1));
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (u != v) pairs.emplace_back(u, v);
    }
  }
  return assemble(n, pairs, weights, rng, false);
}

Graph gen_cycle(std::size_t n, WeightRange weights, std::uint64_t seed) {
  check_range(weights, false);
  if (n == 0) throw InputError("n must be at least 1");
  Rng rng(seed);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  if (n > 1) {
    for (VertexId u = 0; u < n; ++u) pairs.emplace_back(u, static_cast<VertexId>((u + 1) % n));
  }
  return assemble(n, pairs, weights, rng, false);
}

Graph gen_weakly_connected(std::size_t n, std::size_t m, WeightRange weights, std::uint64_t seed) {
  check_range(weights, true);
  if (n == 0) throw InputError("n must be at least 1");
  const std::size_t capacity = n * (n - 1);
  if (m > capacity || m + 1 < n) {
    throw InputError("m must lie in [n-1, n(n-1)]");
  }
  Rng rng(seed);
  auto perm = permutation(n, rng);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::unordered_set<std::uint64_t> taken;
  std::bernoulli_distribution flip(0.5);
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    VertexId a = perm[i];
    VertexId b = perm[pick(rng)];
    if (flip(rng)) std::swap(a, b);
    taken.insert(key(a, b));
    pairs.emplace_back(a, b);
  }
  add_random_pairs(n, m - pairs.size(), capacity - pairs.size(), rng, taken, pairs,
                   [](VertexId, VertexId) { return true; });
  return assemble(n, pairs, weights, rng, weights.min < 0);
}

}  // namespace bbapsp
