#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

namespace mcut {
namespace {

using namespace fixtures;

TEST(GraphTest, RejectsMalformedEdges) {
  EXPECT_THROW(Graph(3, {Edge(0, 0)}), InputError);
  EXPECT_THROW(Graph(3, {Edge(0, 3)}), InputError);
  EXPECT_THROW(Graph(3, {Edge(0, 1), Edge(1, 0)}), InputError);
}

TEST(GraphTest, AdjacencyIsSorted) {
  Graph g(4, {Edge(0, 3), Edge(0, 1), Edge(0, 2)});
  EXPECT_EQ(g.neighbors(0), (VertexSet{1, 2, 3}));
  EXPECT_TRUE(g.adjacent(2, 0));
  EXPECT_FALSE(g.adjacent(1, 2));
  EXPECT_EQ(g.edge_index(Edge(2, 0)), 1);
  EXPECT_EQ(g.edge_index(Edge(1, 2)), -1);
}

TEST(GraphTest, Connectivity) {
  EXPECT_TRUE(C4().connected());
  EXPECT_FALSE(Graph(3, {Edge(0, 1)}).connected());
  EXPECT_TRUE(Graph(1, {}).connected());
}

TEST(ComponentsTest, MinusVertices) {
  EXPECT_EQ(components_minus_vertices(P3(), {1}), (std::vector<VertexSet>{{0}, {2}}));
  EXPECT_EQ(components_minus_vertices(STAR3(), {}), (std::vector<VertexSet>{{0, 1, 2, 3}}));
  EXPECT_EQ(components_minus_vertices(C6(), {1, 3, 5}), (std::vector<VertexSet>{{0}, {2}, {4}}));
}

TEST(ComponentsTest, MinusEdges) {
  EXPECT_EQ(components_minus_edges(C4(), edges({{0, 1}, {2, 3}})), (std::vector<VertexSet>{{0, 3}, {1, 2}}));
  EXPECT_EQ(components_minus_edges(STAR3(), edges({{0, 2}, {0, 3}})), (std::vector<VertexSet>{{0, 1}, {2}, {3}}));
  EXPECT_EQ(components_minus_edges(P3(), {}), (std::vector<VertexSet>{{0, 1, 2}}));
}

TEST(ComponentsTest, PartitionAndConnectivityOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    Graph g = oracle::random_connected_graph(n, 0.3, rng());
    VertexSet removed;
    for (Vertex v = 0; v < n; ++v) {
      if (rng() % 3 == 0) removed.push_back(v);
    }
    auto comps = components_minus_vertices(g, removed);
    VertexSet all;
    for (const auto& c : comps) {
      all = set_union(all, c);
      auto inside = membership_mask(n, c);
      // every member reachable from the first inside the component
      EXPECT_EQ(component_within(g, inside, c.front()), c);
    }
    EXPECT_EQ(all, set_difference(g.all_vertices(), removed));
    for (std::size_t i = 1; i < comps.size(); ++i) EXPECT_LT(comps[i - 1].front(), comps[i].front());
  }
}

TEST(NeighborsTest, OfSet) {
  EXPECT_EQ(neighbors_of_set(STAR3(), {0}), (VertexSet{1, 2, 3}));
  EXPECT_EQ(neighbors_of_set(C4(), {0, 1}), (VertexSet{2, 3}));
  EXPECT_EQ(neighbors_of_set(P5(), {2}), (VertexSet{1, 3}));
}

TEST(ArticulationTest, Fixtures) {
  EXPECT_EQ(articulation_points(P5(), {1, 2, 3}), (VertexSet{2}));
  EXPECT_EQ(articulation_points(C4(), {0, 1, 2, 3}), (VertexSet{}));
  EXPECT_EQ(articulation_points(STAR3(), {0, 1, 2}), (VertexSet{0}));
}

TEST(ArticulationTest, RejectsDisconnected) { EXPECT_THROW(articulation_points(P5(), {0, 2}), InputError); }

TEST(ArticulationTest, AgreesWithComponentCount) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    Graph g = oracle::random_connected_graph(n, 0.25, rng());
    VertexSet within = g.all_vertices();
    VertexSet expected;
    const auto base = components_minus_vertices(g, {}).size();
    for (Vertex v : within) {
      if (components_minus_vertices(g, {v}).size() > base) expected.push_back(v);
    }
    EXPECT_EQ(articulation_points(g, within), expected) << "trial " << trial;
  }
}

TEST(ContractTest, Fixtures) {
  auto c4 = contract_set(C4(), {1, 3});
  EXPECT_EQ(c4.graph.n(), 3);
  EXPECT_EQ(c4.graph.m(), 2);
  const Vertex w = c4.merged;
  EXPECT_EQ(c4.mapping[1], w);
  EXPECT_EQ(c4.mapping[3], w);
  EXPECT_TRUE(c4.graph.adjacent(c4.mapping[0], w));
  EXPECT_TRUE(c4.graph.adjacent(c4.mapping[2], w));
  EXPECT_FALSE(c4.graph.adjacent(c4.mapping[0], c4.mapping[2]));

  auto p3 = contract_set(P3(), {0, 1});
  EXPECT_EQ(p3.graph.n(), 2);
  EXPECT_EQ(p3.graph.m(), 1);

  auto k4 = contract_set(K4(), {0, 1, 2, 3});
  EXPECT_EQ(k4.graph.n(), 1);
  EXPECT_EQ(k4.graph.m(), 0);
}

TEST(InducedTest, RelabelsAscending) {
  auto sub = induced_subgraph(C6(), {1, 2, 3, 5});
  EXPECT_EQ(sub.to_host, (std::vector<Vertex>{1, 2, 3, 5}));
  EXPECT_EQ(sub.graph.m(), 2);
  EXPECT_TRUE(sub.graph.adjacent(0, 1));
  EXPECT_TRUE(sub.graph.adjacent(1, 2));
}

TEST(LineGraphTest, PathExpansion) {
  auto x = line_graph_expand(P3(), pairs({{0, 2}}));
  // e01=0, e12=1, 0'=2, 2'=3
  EXPECT_EQ(x.graph.n(), 4);
  EXPECT_EQ(x.graph.edges(), edges({{0, 1}, {0, 2}, {1, 3}}));
  EXPECT_EQ(x.terminals.pairs(), (std::vector<TerminalPair>{Edge(2, 3)}));
}

TEST(LineGraphTest, SingleEdge) {
  Graph g(2, {Edge(0, 1)});
  auto x = line_graph_expand(g, pairs({{0, 1}}));
  EXPECT_EQ(x.graph.n(), 3);
  auto cuts = collect_vertices([&](auto&& v) { enumerate_minimal_node_multicuts(x.graph, x.terminals, v); });
  ASSERT_EQ(cuts.size(), 1U);
  EXPECT_EQ(x.to_edges(g, cuts[0]), edges({{0, 1}}));
}

TEST(LineGraphTest, StarGivesClique) {
  auto x = line_graph_expand(STAR3(), pairs({{1, 2}}));
  EXPECT_EQ(x.graph.n(), 5);
  EXPECT_TRUE(x.graph.adjacent(0, 1));
  EXPECT_TRUE(x.graph.adjacent(0, 2));
  EXPECT_TRUE(x.graph.adjacent(1, 2));
  const Vertex c1 = x.copy_of[1];
  const Vertex c2 = x.copy_of[2];
  EXPECT_EQ(x.graph.neighbors(c1), (VertexSet{0}));
  EXPECT_EQ(x.graph.neighbors(c2), (VertexSet{1}));
  EXPECT_EQ(x.copy_of[3], -1);
}

// F is an edge multicut of (g, B) iff its image is a node multicut of the
// expansion, over every F of every sampled graph.
TEST(LineGraphTest, CutCorrespondenceExhaustive) {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    Graph g = oracle::random_connected_graph(n, 0.35, rng());
    if (g.m() > 12) continue;
    auto ts = oracle::random_terminals(n, std::min(n, 2 + static_cast<int>(rng() % 3)), rng);
    std::vector<TerminalPair> ps;
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) ps.emplace_back(ts[i], ts[i + 1]);
    TerminalPairs b(ps);
    auto x = line_graph_expand(g, b);
    for (std::uint32_t mask = 0; mask < (1U << g.m()); ++mask) {
      auto f = oracle::detail::pick(g.edges(), mask);
      auto comps = components_minus_edges(g, f);
      bool edge_cut = true;
      for (const auto& p : b.pairs()) {
        for (const auto& c : comps) {
          if (contains(c, p.u) && contains(c, p.v)) edge_cut = false;
        }
      }
      EXPECT_EQ(edge_cut, is_node_multicut(x.graph, x.terminals, x.to_vertices(g, f)));
      ++checked;
    }
  }
  EXPECT_GT(checked, 1000);
}

}  // namespace
}  // namespace mcut
