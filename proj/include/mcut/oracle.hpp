#ifndef MCUT_ORACLE_HPP
#define MCUT_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcut/graph.hpp"
#include "mcut/solution.hpp"
#include "mcut/terminals.hpp"

// Exhaustive reference enumerators. They only use the plain cut definitions
// (reachability after deletion), never the local minimality checks, so they
// can certify the real algorithms.
namespace mcut::oracle {

constexpr int kMaxUniverse = 22;

class GuardExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

enum class OracleKind { kNodeMulticut, kEdgeMulticut, kNodeMultiway, kEdgeMultiway, kSteinerNode };

// A cut solution in canonical form: a sorted vertex or edge set.
struct CutSolution {
  VertexSet vertices;
  EdgeSet edges;

  friend auto operator<=>(const CutSolution&, const CutSolution&) = default;
};

using SolutionSet = std::set<CutSolution>;

// All inclusion-minimal subsets of a universe of size u satisfying a monotone
// predicate. Minimality is checked by single-element deletion.
inline std::vector<std::uint32_t> minimal_subsets(int u, const std::function<bool(std::uint32_t)>& is_cut) {
  if (u > kMaxUniverse) throw GuardExceeded("oracle: candidate universe of " + std::to_string(u) + " elements");
  std::vector<std::uint32_t> out;
  const std::uint32_t limit = std::uint32_t{1} << u;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (!is_cut(mask)) continue;
    bool minimal = true;
    for (int i = 0; i < u && minimal; ++i) {
      if ((mask >> i & 1U) && is_cut(mask & ~(std::uint32_t{1} << i))) minimal = false;
    }
    if (minimal) out.push_back(mask);
  }
  return out;
}

namespace detail {

inline VertexSet pick(const VertexSet& universe, std::uint32_t mask) {
  VertexSet out;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (mask >> i & 1U) out.push_back(universe[i]);
  }
  return out;
}

inline EdgeSet pick(const EdgeSet& universe, std::uint32_t mask) {
  EdgeSet out;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (mask >> i & 1U) out.push_back(universe[i]);
  }
  return out;
}

// Adjacency as 64-bit masks; used when n <= 64.
struct BitGraph {
  std::vector<std::uint64_t> adj;

  explicit BitGraph(const Graph& g) : adj(static_cast<std::size_t>(g.n()), 0) {
    for (const auto& e : g.edges()) {
      adj[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
      adj[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
    }
  }

  // Vertices reachable from s in the graph restricted to `alive`.
  std::uint64_t reach(int s, std::uint64_t alive) const {
    std::uint64_t seen = std::uint64_t{1} << s;
    std::uint64_t frontier = seen;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(__builtin_ctzll(f))];
      next &= alive & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }
};

inline bool separates_vertices(const Graph& g, const std::vector<TerminalPair>& pairs, const VertexSet& removed) {
  if (g.n() <= 64) {
    BitGraph bg(g);
    std::uint64_t alive = g.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n()) - 1;
    for (Vertex v : removed) alive &= ~(std::uint64_t{1} << v);
    for (const auto& p : pairs) {
      if (bg.reach(p.u, alive) >> p.v & 1U) return false;
    }
    return true;
  }
  auto labels = label_components_minus(g, removed);
  for (const auto& p : pairs) {
    if (labels.of(p.u) == labels.of(p.v)) return false;
  }
  return true;
}

inline bool separates_edges(const Graph& g, const std::vector<TerminalPair>& pairs, const EdgeSet& removed) {
  auto comps = components_minus_edges(g, removed);
  std::vector<int> label(static_cast<std::size_t>(g.n()));
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (Vertex v : comps[c]) label[static_cast<std::size_t>(v)] = static_cast<int>(c);
  }
  for (const auto& p : pairs) {
    if (label[static_cast<std::size_t>(p.u)] == label[static_cast<std::size_t>(p.v)]) return false;
  }
  return true;
}

// Predicate over subset masks of `universe` (vertex ids), bitmask based
// when the graph is small enough.
inline std::function<bool(std::uint32_t)> vertex_cut_predicate(const Graph& g, const std::vector<TerminalPair>& pairs,
                                                               const VertexSet& universe) {
  if (g.n() > 64) {
    return [&g, &pairs, &universe](std::uint32_t mask) { return separates_vertices(g, pairs, pick(universe, mask)); };
  }
  auto bg = std::make_shared<BitGraph>(g);
  const std::uint64_t all = g.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n()) - 1;
  return [bg, all, &pairs, &universe](std::uint32_t mask) {
    std::uint64_t alive = all;
    for (std::uint32_t m = mask; m; m &= m - 1) alive &= ~(std::uint64_t{1} << universe[static_cast<std::size_t>(__builtin_ctz(m))]);
    for (const auto& p : pairs) {
      if (bg->reach(p.u, alive) >> p.v & 1U) return false;
    }
    return true;
  };
}

inline std::function<bool(std::uint32_t)> edge_cut_predicate(const Graph& g, const std::vector<TerminalPair>& pairs) {
  if (g.n() > 64) {
    return [&g, &pairs](std::uint32_t mask) { return separates_edges(g, pairs, pick(g.edges(), mask)); };
  }
  return [&g, &pairs](std::uint32_t mask) {
    BitGraph kept(Graph(g.n(), {}));
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
      if (mask >> i & 1U) continue;
      const auto& e = g.edges()[i];
      kept.adj[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
      kept.adj[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
    }
    const std::uint64_t all = g.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n()) - 1;
    for (const auto& p : pairs) {
      if (kept.reach(p.u, all) >> p.v & 1U) return false;
    }
    return true;
  };
}

inline SolutionSet node_cuts(const Graph& g, const std::vector<TerminalPair>& pairs, const VertexSet& terminals) {
  VertexSet universe = set_difference(g.all_vertices(), terminals);
  SolutionSet out;
  auto masks = minimal_subsets(static_cast<int>(universe.size()), vertex_cut_predicate(g, pairs, universe));
  for (auto mask : masks) out.insert({pick(universe, mask), {}});
  return out;
}

inline SolutionSet edge_cuts(const Graph& g, const std::vector<TerminalPair>& pairs) {
  SolutionSet out;
  auto masks = minimal_subsets(g.m(), edge_cut_predicate(g, pairs));
  for (auto mask : masks) out.insert({{}, pick(g.edges(), mask)});
  return out;
}

}  // namespace detail

inline SolutionSet brute_force_enumerate(const Graph& g, const TerminalPairs& b, OracleKind kind) {
  switch (kind) {
    case OracleKind::kNodeMulticut:
      return detail::node_cuts(g, b.pairs(), b.terminals());
    case OracleKind::kEdgeMulticut:
      return detail::edge_cuts(g, b.pairs());
    default:
      throw std::invalid_argument("oracle: pair terminals given for a multiway or steiner kind");
  }
}

inline SolutionSet brute_force_enumerate(const Graph& g, const OrderedTerminals& t, OracleKind kind) {
  const auto all = t.all_pairs();
  switch (kind) {
    case OracleKind::kNodeMultiway:
      return detail::node_cuts(g, all.pairs(), t.sorted());
    case OracleKind::kEdgeMultiway:
      return detail::edge_cuts(g, all.pairs());
    default:
      throw std::invalid_argument("oracle: ordered terminals given for a multicut or steiner kind");
  }
}

// Inclusion-minimal vertex sets avoiding a and b whose removal disconnects them.
inline std::set<VertexSet> brute_force_ab_separators(const Graph& g, Vertex a, Vertex b) {
  const VertexSet universe = set_difference(g.all_vertices(), normalized(VertexSet{a, b}));
  const std::vector<TerminalPair> ab{Edge(a, b)};
  std::set<VertexSet> out;
  if (g.adjacent(a, b)) return out;
  for (auto mask : minimal_subsets(static_cast<int>(universe.size()), detail::vertex_cut_predicate(g, ab, universe))) {
    out.insert(detail::pick(universe, mask));
  }
  return out;
}

inline SolutionSet as_solutions(const std::vector<VertexSet>& cuts) {
  SolutionSet out;
  for (const auto& c : cuts) out.insert({normalized(c), {}});
  return out;
}

inline SolutionSet as_solutions(const std::vector<EdgeSet>& cuts) {
  SolutionSet out;
  for (const auto& c : cuts) out.insert({{}, normalized(c)});
  return out;
}

// Random connected graph: a random spanning tree (vertex i attaches to a
// uniformly chosen earlier vertex) plus every other pair with probability q.
inline Graph random_connected_graph(int n, double q, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_connected_graph: n must be positive");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> parent(0, v - 1);
    edges.emplace_back(parent(rng), v);
  }
  auto tree = normalized(edges);
  std::bernoulli_distribution coin(q);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (std::binary_search(tree.begin(), tree.end(), Edge(u, v))) continue;
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, normalized(std::move(edges)));
}

// Distinct vertices drawn without replacement, in draw order.
inline std::vector<Vertex> random_terminals(int n, int k, std::mt19937_64& rng) {
  std::vector<Vertex> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(k));
  return all;
}

}  // namespace mcut::oracle

#endif  // MCUT_ORACLE_HPP
