#ifndef MCUT_STEINER_HPP
#define MCUT_STEINER_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mcut/graph.hpp"
#include "mcut/oracle.hpp"

namespace mcut {

// H = (U, E) with U = {0, ..., universe-1}. Duplicate hyperedges are removed.
struct Hypergraph {
  int universe = 0;
  std::vector<VertexSet> edges;

  static Hypergraph make(int universe, std::vector<VertexSet> edges) {
    if (universe < 0) throw InputError("hypergraph: negative universe size");
    for (auto& e : edges) {
      e = normalized(std::move(e));
      if (e.empty()) throw InputError("hypergraph: empty hyperedge");
      if (e.front() < 0 || e.back() >= universe) throw InputError("hypergraph: member out of range");
    }
    return {universe, normalized(std::move(edges))};
  }
};

// Terminal groups T_1, ..., T_k; a Steiner node multicut splits at least one
// pair inside every group.
struct SteinerSpec {
  std::vector<VertexSet> groups;

  VertexSet all_terminals() const {
    VertexSet out;
    for (const auto& g : groups) out.insert(out.end(), g.begin(), g.end());
    return normalized(std::move(out));
  }
};

struct SplitGraph {
  Graph graph;
  SteinerSpec spec;
  std::vector<Vertex> universe_of;     // graph vertex -> hypergraph vertex, -1 for pendants
  std::vector<int> degenerate_groups;  // indices of groups with fewer than two members
};

// Clique on U (vertices 0..|U|-1), then for every hyperedge e and every
// v in e a fresh pendant vertex attached to v; T_e collects e's pendants.
inline SplitGraph hypergraph_to_split_graph(const Hypergraph& h) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < h.universe; ++u) {
    for (Vertex v = u + 1; v < h.universe; ++v) edges.emplace_back(u, v);
  }
  SplitGraph out;
  out.universe_of.resize(static_cast<std::size_t>(h.universe));
  for (Vertex u = 0; u < h.universe; ++u) out.universe_of[static_cast<std::size_t>(u)] = u;
  Vertex next = h.universe;
  for (std::size_t e = 0; e < h.edges.size(); ++e) {
    VertexSet group;
    for (Vertex v : h.edges[e]) {
      edges.emplace_back(v, next);
      group.push_back(next);
      out.universe_of.push_back(-1);
      ++next;
    }
    if (group.size() < 2) out.degenerate_groups.push_back(static_cast<int>(e));
    out.spec.groups.push_back(std::move(group));
  }
  out.graph = Graph(next, normalized(std::move(edges)));
  return out;
}

inline std::set<VertexSet> brute_force_minimal_steiner_multicuts(const Graph& g, const SteinerSpec& spec) {
  for (const auto& group : spec.groups) {
    if (group.size() < 2) throw InputError("steiner: terminal group with fewer than two vertices");
  }
  const VertexSet universe = set_difference(g.all_vertices(), spec.all_terminals());
  auto split_all = [&](std::uint32_t mask) {
    auto labels = label_components_minus(g, oracle::detail::pick(universe, mask));
    for (const auto& group : spec.groups) {
      bool split = false;
      for (Vertex x : group) {
        if (labels.of(x) != labels.of(group.front())) {
          split = true;
          break;
        }
      }
      if (!split) return false;
    }
    return true;
  };
  std::set<VertexSet> out;
  for (auto mask : oracle::minimal_subsets(static_cast<int>(universe.size()), split_all)) {
    out.insert(oracle::detail::pick(universe, mask));
  }
  return out;
}

inline std::set<VertexSet> minimal_transversals_brute(const Hypergraph& h) {
  std::vector<std::uint32_t> edge_masks;
  for (const auto& e : h.edges) {
    std::uint32_t mask = 0;
    for (Vertex v : e) mask |= std::uint32_t{1} << v;
    edge_masks.push_back(mask);
  }
  auto hits_all = [&](std::uint32_t s) {
    for (auto e : edge_masks) {
      if ((e & s) == 0) return false;
    }
    return true;
  };
  std::set<VertexSet> out;
  for (auto mask : oracle::minimal_subsets(h.universe, hits_all)) {
    VertexSet s;
    for (Vertex v = 0; v < h.universe; ++v) {
      if (mask >> v & 1U) s.push_back(v);
    }
    out.insert(std::move(s));
  }
  return out;
}

// Minimal transversals of h coincide with the minimal Steiner node multicuts
// of its split graph (read back through the universe mapping).
inline bool cross_check_transversals(const Hypergraph& h) {
  auto split = hypergraph_to_split_graph(h);
  if (!split.degenerate_groups.empty()) {
    throw InputError("steiner: hyperedge of size one has no separable pair");
  }
  std::set<VertexSet> from_graph;
  for (const auto& s : brute_force_minimal_steiner_multicuts(split.graph, split.spec)) {
    VertexSet mapped;
    for (Vertex x : s) mapped.push_back(split.universe_of[static_cast<std::size_t>(x)]);
    from_graph.insert(normalized(std::move(mapped)));
  }
  return from_graph == minimal_transversals_brute(h);
}

}  // namespace mcut

#endif  // MCUT_STEINER_HPP
