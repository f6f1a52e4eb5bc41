#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fixtures.hpp"

namespace mcut {
namespace {

using namespace fixtures;

OrderedPartition part(int n, std::vector<VertexSet> blocks) { return OrderedPartition::from_blocks(n, std::move(blocks)); }

std::vector<EdgeSet> edge_multiway(const Graph& g, const OrderedTerminals& t) {
  std::vector<EdgeSet> out;
  enumerate_minimal_edge_multiway(g, t, [&](const EdgeSet& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

std::vector<OrderedPartition> all_partitions(const Graph& g, const OrderedTerminals& t) {
  std::vector<OrderedPartition> out;
  EdgeMultiwayEnumerator e(g, t);
  while (auto p = e.next_partition()) out.push_back(std::move(*p));
  return out;
}

std::vector<OrderedPartition> children(const Graph& g, const OrderedTerminals& t, const OrderedPartition& p) {
  std::vector<OrderedPartition> out;
  children_stream(g, t, p, [&](const OrderedPartition& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

// K_{2,j}: terminals 0 and 1, every middle vertex adjacent to both.
Graph double_star(int j) {
  std::vector<Edge> e;
  for (int i = 0; i < j; ++i) {
    e.emplace_back(0, 2 + i);
    e.emplace_back(1, 2 + i);
  }
  return Graph(2 + j, e);
}

TEST(RootTest, Fixtures) {
  EXPECT_EQ(compute_root(STAR3(), terms({1, 2, 3})), part(4, {{0, 1}, {2}, {3}}));
  EXPECT_EQ(compute_root(STAR3(), terms({1, 2, 3})).cut_edges(STAR3()), edges({{0, 2}, {0, 3}}));
  EXPECT_EQ(compute_root(C4(), terms({0, 2})), part(4, {{0, 1, 3}, {2}}));
  EXPECT_EQ(compute_root(K4(), terms({0, 1, 2, 3})).cut_edges(K4()), K4().edges());
}

TEST(RootTest, RootIsMinimal) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    Graph g = oracle::random_connected_graph(n, 0.3, rng());
    OrderedTerminals t(oracle::random_terminals(n, 1 + static_cast<int>(rng() % std::min(n, 4)), rng));
    auto r = compute_root(g, t);
    EXPECT_TRUE(r.valid_for(g, t));
    EXPECT_TRUE(check_minimal_edge_multiway(g, t, r.cut_edges(g)));
  }
}

TEST(RootTest, RejectsDisconnected) {
  EXPECT_THROW(compute_root(Graph(3, {Edge(0, 1)}), terms({0, 2})), InputError);
}

TEST(DepthTest, Fixtures) {
  auto root = compute_root(C4(), terms({0, 2}));
  EXPECT_EQ(depth(root, root), 0);
  EXPECT_EQ(depth(part(4, {{0, 1}, {2, 3}}), root), 1);
  EXPECT_EQ(depth(part(4, {{0}, {1, 2, 3}}), root), 2);
}

TEST(ShiftableTest, Fixtures) {
  auto t = terms({0, 2});
  EXPECT_TRUE(shiftable_vertices(C4(), t, compute_root(C4(), t)).empty());
  EXPECT_EQ(shiftable_vertices(C4(), t, part(4, {{0}, {1, 2, 3}})), (std::vector<Shift>{{1, 0}, {3, 0}}));
  EXPECT_EQ(shiftable_vertices(STAR3(), terms({1, 2, 3}), part(4, {{1}, {0, 2}, {3}})), (std::vector<Shift>{{0, 0}}));
}

TEST(PivotTest, Fixtures) {
  EXPECT_EQ(select_pivot(C4(), terms({0, 2}), part(4, {{0}, {1, 2, 3}})), (PivotChoice{1, 0, 1}));
  EXPECT_EQ(select_pivot(P5(), terms({0, 4}), part(5, {{0}, {1, 2, 3, 4}})), (PivotChoice{1, 0, 1}));
  EXPECT_EQ(select_pivot(path(4), terms({0, 3}), part(4, {{0}, {1, 2, 3}})).pivot, 1);
  auto t = terms({0, 2});
  EXPECT_THROW(select_pivot(C4(), t, compute_root(C4(), t)), InputError);
}

TEST(ParentTest, Fixtures) {
  auto t = terms({0, 2});
  EXPECT_EQ(parent(C4(), t, part(4, {{0}, {1, 2, 3}})), part(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(parent(C4(), t, part(4, {{0, 1}, {2, 3}})), compute_root(C4(), t));
  auto ts = terms({1, 2, 3});
  EXPECT_EQ(parent(STAR3(), ts, part(4, {{1}, {0, 2}, {3}})), compute_root(STAR3(), ts));
}

TEST(ChildrenTest, Fixtures) {
  auto t = terms({0, 2});
  auto c = children(C4(), t, compute_root(C4(), t));
  EXPECT_EQ(c, (std::vector<OrderedPartition>{part(4, {{0, 3}, {1, 2}}), part(4, {{0, 1}, {2, 3}})}));
  bool grandchild = false;
  for (const auto& x : c) {
    for (const auto& y : children(C4(), t, x)) grandchild = grandchild || y == part(4, {{0}, {1, 2, 3}});
  }
  EXPECT_TRUE(grandchild);

  auto tk = terms({0, 1, 2, 3});
  EXPECT_TRUE(children(K4(), tk, compute_root(K4(), tk)).empty());

  auto ts = terms({1, 2, 3});
  // root ({0,1},{2},{3}) has one child; the third solution hangs below it
  auto cs = children(STAR3(), ts, compute_root(STAR3(), ts));
  EXPECT_EQ(cs, (std::vector<OrderedPartition>{part(4, {{1}, {0, 2}, {3}})}));
  EXPECT_EQ(children(STAR3(), ts, cs.at(0)), (std::vector<OrderedPartition>{part(4, {{1}, {2}, {0, 3}})}));
  EXPECT_EQ(parent(STAR3(), ts, part(4, {{1}, {2}, {0, 3}})), part(4, {{1}, {0, 2}, {3}}));
}

TEST(EdgeMultiwayTest, Fixtures) {
  auto c4 = edge_multiway(C4(), terms({0, 2}));
  EXPECT_EQ(std::set<EdgeSet>(c4.begin(), c4.end()),
            (std::set<EdgeSet>{edges({{0, 1}, {0, 3}}), edges({{0, 1}, {2, 3}}), edges({{1, 2}, {0, 3}}),
                               edges({{1, 2}, {2, 3}})}));
  EXPECT_EQ(c4.size(), 4U);
  auto star = edge_multiway(STAR3(), terms({1, 2, 3}));
  EXPECT_EQ(star.size(), 3U);
  for (const auto& f : star) EXPECT_EQ(f.size(), 2U);
  EXPECT_EQ(edge_multiway(K4(), terms({0, 1, 2, 3})), (std::vector<EdgeSet>{K4().edges()}));
}

TEST(EdgeMultiwayTest, SingleTerminalAndNone) {
  EXPECT_EQ(edge_multiway(C4(), terms({2})), (std::vector<EdgeSet>{{}}));
  EXPECT_EQ(edge_multiway(C4(), terms({})), (std::vector<EdgeSet>{{}}));
}

struct OrderedInstance {
  Graph g;
  OrderedTerminals t;
};

std::vector<OrderedInstance> random_instances(int count, int max_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<OrderedInstance> out;
  while (static_cast<int>(out.size()) < count) {
    const int n = 4 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - 3));
    Graph g = oracle::random_connected_graph(n, 0.3, rng());
    const int k = 2 + static_cast<int>(rng() % 3);
    out.push_back({g, OrderedTerminals(oracle::random_terminals(n, k, rng))});
  }
  return out;
}

TEST(EdgeMultiwayTest, MatchesOracle) {
  for (const auto& [g, t] : random_instances(80, 7, 71)) {
    if (g.m() > 16) continue;
    auto got = edge_multiway(g, t);
    EXPECT_FALSE(has_duplicates(got));
    for (const auto& f : got) EXPECT_TRUE(check_minimal_edge_multiway(g, t, f));
    EXPECT_EQ(oracle::as_solutions(got), oracle::brute_force_enumerate(g, t, oracle::OracleKind::kEdgeMultiway));
  }
}

// The line-graph expansion plus node multiway enumeration reaches the same cuts.
TEST(EdgeMultiwayTest, AgreesWithLineGraphRoute) {
  std::vector<OrderedInstance> cases{{C4(), terms({0, 2})}, {STAR3(), terms({1, 2, 3})}, {K4(), terms({0, 1, 2, 3})},
                                     {P5(), terms({0, 4})}, {C6(), terms({0, 2, 4})}};
  for (auto& r : random_instances(40, 7, 73)) cases.push_back(r);
  for (const auto& [g, t] : cases) {
    auto x = line_graph_expand(g, t);
    std::set<EdgeSet> via;
    enumerate_minimal_node_multiway(x.graph, x.terminals, [&](const VertexSet& s) {
      via.insert(normalized(x.to_edges(g, s)));
      return true;
    });
    auto direct = edge_multiway(g, t);
    EXPECT_EQ(std::set<EdgeSet>(direct.begin(), direct.end()), via);
  }
}

TEST(EdgeMultiwayTest, TerminalOrderDoesNotChangeTheSet) {
  for (const auto& [g, t] : random_instances(40, 7, 79)) {
    auto order = t.order();
    auto base = edge_multiway(g, t);
    const std::set<EdgeSet> expected(base.begin(), base.end());
    std::reverse(order.begin(), order.end());
    auto rev = edge_multiway(g, OrderedTerminals(order));
    EXPECT_EQ(std::set<EdgeSet>(rev.begin(), rev.end()), expected);
    EXPECT_EQ(rev.size(), base.size());
  }
}

void expect_tree_structure(const Graph& g, const OrderedTerminals& t) {
  const auto root = compute_root(g, t);
  for (const auto& p : all_partitions(g, t)) {
    ASSERT_TRUE(p.valid_for(g, t));
    ASSERT_TRUE(check_minimal_edge_multiway(g, t, p.cut_edges(g)));
    EXPECT_GE(depth(p, root), 0);
    if (p == root) continue;
    auto par = parent(g, t, p);
    EXPECT_TRUE(check_minimal_edge_multiway(g, t, par.cut_edges(g)));
    EXPECT_LT(depth(par, root), depth(p, root));
    auto cs = children(g, t, par);
    EXPECT_EQ(std::count(cs.begin(), cs.end(), p), 1);

    OrderedPartition cur = p;
    int steps = 0;
    while (!(cur == root) && steps <= t.k() * g.n()) {
      cur = parent(g, t, cur);
      ++steps;
    }
    EXPECT_EQ(cur, root);
    EXPECT_LE(steps, t.k() * g.n());
  }
}

TEST(ReverseSearchTest, ParentChildDuality) {
  expect_tree_structure(C4(), terms({0, 2}));
  expect_tree_structure(STAR3(), terms({1, 2, 3}));
  expect_tree_structure(K4(), terms({0, 1, 2, 3}));
  expect_tree_structure(double_star(4), terms({0, 1}));
  for (const auto& [g, t] : random_instances(40, 8, 83)) expect_tree_structure(g, t);
}

TEST(ReverseSearchTest, AlternatingOutput) {
  std::vector<OrderedInstance> cases{{C4(), terms({0, 2})}, {double_star(5), terms({0, 1})}};
  for (auto& r : random_instances(30, 8, 89)) cases.push_back(r);
  for (const auto& [g, t] : cases) {
    EdgeMultiwayEnumerator e(g, t, true);
    std::size_t outputs = 0;
    while (e.next()) ++outputs;
    const auto& tour = e.tour();
    std::size_t emitting = 0;
    for (const auto& ev : tour) emitting += ev.emits ? 1 : 0;
    EXPECT_EQ(emitting, outputs);
    for (std::size_t i = 0; i + 2 < tour.size(); ++i) {
      EXPECT_TRUE(tour[i].emits || tour[i + 1].emits || tour[i + 2].emits) << "event " << i;
    }
  }
}

TEST(ReverseSearchTest, RetainedStateIndependentOfOutputCount) {
  for (int j = 4; j <= 10; ++j) {
    Graph g = double_star(j);
    auto t = terms({0, 1});
    EdgeMultiwayEnumerator e(g, t);
    std::size_t outputs = 0;
    while (e.next()) ++outputs;
    EXPECT_EQ(outputs, std::size_t{1} << j);
    EXPECT_LE(e.stats().peak_frames, static_cast<std::size_t>(t.k() * g.n() + 1));
    EXPECT_LE(e.stats().peak_retained, static_cast<std::size_t>(4 * t.k() * g.n() * g.n())) << "j=" << j;
  }
}

// Reference for pivot step 3: v is dominated when some other w in Q has
// every simple w - t_s path inside C_s passing through v.
bool all_paths_hit(const Graph& g, const VertexSet& block, Vertex from, Vertex to, Vertex via) {
  std::vector<char> inside = membership_mask(g.n(), block);
  std::vector<char> on_path(static_cast<std::size_t>(g.n()), 0);
  bool escaped = false;
  auto dfs = [&](auto&& self, Vertex x, bool hit) -> void {
    if (escaped) return;
    if (x == to) {
      escaped = !hit;
      return;
    }
    on_path[static_cast<std::size_t>(x)] = 1;
    for (Vertex y : g.neighbors(x)) {
      if (inside[static_cast<std::size_t>(y)] && !on_path[static_cast<std::size_t>(y)]) self(self, y, hit || y == via);
    }
    on_path[static_cast<std::size_t>(x)] = 0;
  };
  dfs(dfs, from, from == via);
  return !escaped;
}

Vertex reference_pivot(const Graph& g, const OrderedTerminals& t, const OrderedPartition& p) {
  auto shifts = shiftable_vertices(g, t, p);
  int li = -1;
  for (const auto& s : shifts) li = std::max(li, s.target);
  VertexSet q;
  for (const auto& s : shifts) {
    if (s.target == li) q.push_back(s.vertex);
  }
  q = normalized(q);
  int src = -1;
  for (Vertex v : q) src = std::max(src, p.of(v));
  std::erase_if(q, [&](Vertex v) { return p.of(v) != src; });
  const VertexSet& block = p.blocks[static_cast<std::size_t>(src)];
  VertexSet non_cut;
  for (Vertex v : q) {
    VertexSet rest = set_difference(block, {v});
    if (components_minus_vertices(induced_subgraph(g, block).graph, {}).size() ==
        components_minus_vertices(induced_subgraph(g, rest).graph, {}).size()) {
      non_cut.push_back(v);
    }
  }
  if (!non_cut.empty()) return non_cut.front();
  VertexSet kept;
  for (Vertex v : q) {
    bool dominated = false;
    for (Vertex w : q) dominated = dominated || (w != v && all_paths_hit(g, block, w, t[src], v));
    if (!dominated) kept.push_back(v);
  }
  return kept.front();
}

TEST(PivotTest, MatchesPathEnumeration) {
  int checked = 0;
  for (const auto& [g, t] : random_instances(120, 7, 97)) {
    const auto root = compute_root(g, t);
    for (const auto& p : all_partitions(g, t)) {
      if (p == root) continue;
      EXPECT_EQ(select_pivot(g, t, p).pivot, reference_pivot(g, t, p));
      ++checked;
    }
  }
  // chains force the all-cut-vertex branch
  for (int n = 4; n <= 7; ++n) {
    Graph g = path(n);
    auto t = terms({0, n - 1});
    for (const auto& p : all_partitions(g, t)) {
      if (p == compute_root(g, t)) continue;
      EXPECT_EQ(select_pivot(g, t, p).pivot, reference_pivot(g, t, p));
      ++checked;
    }
  }
  EXPECT_GT(checked, 200);
}

}  // namespace
}  // namespace mcut
