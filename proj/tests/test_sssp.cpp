#include <gtest/gtest.h>

#include "bbapsp/generators.hpp"
#include "bbapsp/sssp.hpp"
#include "bbapsp/topo.hpp"
#include "support/fixtures.hpp"

namespace bbapsp {
namespace {

using testing::fixture_d;
using testing::fixture_k;
using testing::inf;
using testing::w;

std::vector<Weight> ws(std::initializer_list<Weight> list) { return list; }

// Walks every parent chain and checks it sums to dist.
void expect_tree_consistent(const DigraphView& g, const SsspOutput& out, VertexId source) {
  const std::size_t n = g.num_vertices();
  ASSERT_EQ(out.dist[source], w(0));
  for (VertexId v = 0; v < n; ++v) {
    if (v == source) continue;
    if (!out.dist[v].is_finite()) {
      EXPECT_EQ(out.parent[v], kNoVertex);
      EXPECT_EQ(out.first_hop[v], kNoVertex);
      continue;
    }
    Weight sum = w(0);
    VertexId x = v;
    std::size_t steps = 0;
    VertexId below_source = v;
    while (x != source) {
      const VertexId p = out.parent[x];
      ASSERT_NE(p, kNoVertex);
      Weight best = inf();
      for (const OutArc& a : g.out(p)) {
        if (a.head == x) best = std::min(best, a.length);
      }
      sum += best;
      if (p == source) below_source = x;
      x = p;
      ASSERT_LE(++steps, n);
    }
    EXPECT_EQ(sum, out.dist[v]);
    EXPECT_EQ(out.first_hop[v], below_source);
  }
}

TEST(Dijkstra, FixtureK) {
  Graph k = fixture_k();
  SsspOutput out = dijkstra(k, 0);
  EXPECT_EQ(out.dist, ws({w(0), w(1), w(3)}));
  EXPECT_EQ(out.first_hop[2], 1u);
  EXPECT_EQ(out.first_hop[1], 1u);
  EXPECT_EQ(out.first_hop[0], kNoVertex);
  expect_tree_consistent(k.forward(), out, 0);
}

TEST(Dijkstra, SingleVertexAndTwoCycle) {
  EXPECT_EQ(dijkstra(testing::single_vertex(), 0).dist, ws({w(0)}));
  Graph two = gen_random_digraph(2, 2, {1, 1}, 0);
  EXPECT_EQ(dijkstra(two, 0).dist, ws({w(0), w(1)}));
}

TEST(Dijkstra, RejectsNegativeArc) {
  try {
    dijkstra(fixture_d(), 0);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("(1,2)"), std::string::npos) << e.what();
  }
}

TEST(Dijkstra, EqualKeysPopBySmallerVertex) {
  // 1 -> 2 and 1 -> 3 both length 1, 2 -> 4 and 3 -> 4 both length 1: vertex
  // 2 settles first, so 4 hangs below 2.
  std::vector<Arc> arcs{{0, 2, w(1)}, {0, 1, w(1)}, {2, 3, w(1)}, {1, 3, w(1)}};
  SsspOutput out = dijkstra(build_graph(4, arcs), 0);
  EXPECT_EQ(out.parent[3], 1u);
  EXPECT_EQ(out.first_hop[3], 1u);
}

TEST(Dijkstra, SourceOutOfRange) {
  EXPECT_THROW(dijkstra(fixture_k(), 3), InputError);
}

TEST(DagSssp, FixtureD) {
  Graph d = fixture_d();
  EXPECT_EQ(dag_topo_sssp(d, 0).dist, ws({w(0), w(-2), w(1)}));
  SsspOutput sink = dag_topo_sssp(d, 2);
  EXPECT_EQ(sink.dist, ws({inf(), inf(), w(0)}));
  expect_tree_consistent(d.forward(), dag_topo_sssp(d, 0), 0);
}

TEST(DagSssp, SingleArc) {
  std::vector<Arc> arcs{{0, 1, w(-5)}};
  EXPECT_EQ(dag_topo_sssp(build_graph(2, arcs, true), 0).dist, ws({w(0), w(-5)}));
}

TEST(DagSssp, CycleRejectedWithWitness) {
  try {
    dag_topo_sssp(fixture_k(), 0);
    FAIL() << "expected CycleError";
  } catch (const CycleError& e) {
    EXPECT_EQ(e.witness(), (std::vector<VertexId>{0, 1, 2}));
  }
}

TEST(BellmanFord, Fixtures) {
  EXPECT_EQ(bellman_ford(fixture_d(), 0).dist, ws({w(0), w(-2), w(1)}));
  Graph k = fixture_k();
  SsspOutput out = bellman_ford(k, 1);
  EXPECT_EQ(out.dist, ws({w(6), w(0), w(2)}));
  expect_tree_consistent(k.forward(), out, 1);
}

TEST(BellmanFord, NegativeCycle) {
  std::vector<Arc> arcs{{0, 1, w(1)}, {1, 0, w(-2)}};
  try {
    bellman_ford(build_graph(2, arcs, true), 0);
    FAIL() << "expected NegativeCycleError";
  } catch (const NegativeCycleError& e) {
    EXPECT_EQ(e.witness(), (std::vector<VertexId>{0, 1}));
  }
}

TEST(BellmanFord, UnreachableNegativeCycleIsFine) {
  std::vector<Arc> arcs{{1, 2, w(1)}, {2, 1, w(-2)}};
  SsspOutput out = bellman_ford(build_graph(3, arcs, true), 0);
  EXPECT_EQ(out.dist, ws({w(0), inf(), inf()}));
}

TEST(FirstHops, Definition) {
  SsspOutput out;
  out.parent = {kNoVertex, 0, 1, 2, kNoVertex};
  EXPECT_EQ(first_hops(out, 0), (std::vector<VertexId>{kNoVertex, 1, 1, 1, kNoVertex}));
  out.parent = {kNoVertex, 0, 0, 1};
  EXPECT_EQ(first_hops(out, 0), (std::vector<VertexId>{kNoVertex, 1, 2, 1}));
}

TEST(FirstHops, BrokenTreeIsInternalFault) {
  SsspOutput out;
  out.parent = {kNoVertex, 2, 1};
  EXPECT_THROW(first_hops(out, 0), InternalFault);
}

TEST(Engines, AgreeOnRandomNonNegativeGraphs) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = gen_random_digraph(20, 60, {0, 20}, seed);
    for (VertexId s = 0; s < 20; s += 7) {
      SsspOutput a = dijkstra(g, s);
      SsspOutput b = bellman_ford(g, s);
      EXPECT_EQ(a.dist, b.dist);
      expect_tree_consistent(g.forward(), a, s);
      expect_tree_consistent(g.forward(), b, s);
    }
  }
}

TEST(Engines, AgreeOnRandomDags) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = gen_random_dag(20, 60, {-50, 100}, seed);
    for (VertexId s = 0; s < 20; s += 3) {
      SsspOutput a = dag_topo_sssp(g, s);
      EXPECT_EQ(a.dist, bellman_ford(g, s).dist);
      expect_tree_consistent(g.forward(), a, s);
    }
  }
}

TEST(Engines, Pure) {
  Graph g = gen_random_digraph(30, 120, {0, 5}, 9);
  Graph d = gen_random_dag(30, 120, {-5, 5}, 9);
  for (std::string_view name : {"dijkstra", "bellman-ford"}) {
    auto e = make_engine(name);
    EXPECT_EQ(e->solve(g.forward(), 4), e->solve(g.forward(), 4));
  }
  auto dag = make_engine("dag");
  EXPECT_EQ(dag->solve(d.forward(), 0), dag->solve(d.forward(), 0));
}

TEST(Engines, FactoryAndRequirements) {
  EXPECT_EQ(make_engine("dijkstra")->requirement(), InputRequirement::kNonNegative);
  EXPECT_EQ(make_engine("dag")->requirement(), InputRequirement::kAcyclic);
  EXPECT_EQ(make_engine("bellman-ford")->requirement(), InputRequirement::kAnyWeights);
  EXPECT_EQ(make_engine("dag")->name(), "dag");
  EXPECT_THROW(make_engine("fibonacci"), InputError);
}

TEST(Topo, FixtureOrders) {
  TopoOrder t = topological_order(fixture_d().forward());
  EXPECT_EQ(t.order, (std::vector<VertexId>{0, 1, 2}));
  EXPECT_EQ(t.rank, (std::vector<std::uint32_t>{0, 1, 2}));
  EXPECT_FALSE(is_acyclic(fixture_k().forward()));
}

TEST(Topo, IsolatedVertices) {
  Graph g = build_graph(4, std::vector<Arc>{{3, 0, w(1)}});
  TopoOrder t = topological_order(g.forward());
  ASSERT_EQ(t.order.size(), 4u);
  EXPECT_LT(t.rank[3], t.rank[0]);
}

}  // namespace
}  // namespace bbapsp
