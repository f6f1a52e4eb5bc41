#ifndef MCUT_LINE_GRAPH_HPP
#define MCUT_LINE_GRAPH_HPP

#include <vector>

#include "mcut/graph.hpp"
#include "mcut/terminals.hpp"

namespace mcut {

// Line graph of g plus one copy t' per terminal t, adjacent to every
// edge-vertex incident to t. Edge i of g (in g.edges() order) becomes vertex
// i; terminal copies follow at m, m+1, ... in ascending terminal order.
// Node cuts of the expansion correspond to edge cuts of g.
template <typename Spec>
struct LineGraphExpansion {
  Graph graph;
  Spec terminals;
  std::vector<Vertex> copy_of;  // g vertex -> terminal copy, or -1
  int edge_vertices = 0;        // = g.m()

  EdgeSet to_edges(const Graph& host, const VertexSet& s) const {
    EdgeSet out;
    out.reserve(s.size());
    for (Vertex x : s) {
      if (x >= edge_vertices) throw InputError("line graph: terminal copy in an edge set");
      out.push_back(host.edges()[static_cast<std::size_t>(x)]);
    }
    return out;
  }

  VertexSet to_vertices(const Graph& host, const EdgeSet& f) const {
    VertexSet out;
    out.reserve(f.size());
    for (const auto& e : f) {
      int idx = host.edge_index(e);
      if (idx < 0) throw InputError("line graph: edge not in host graph");
      out.push_back(idx);
    }
    return normalized(std::move(out));
  }
};

namespace detail {

inline LineGraphExpansion<int> line_graph_core(const Graph& g, const VertexSet& terminals) {
  LineGraphExpansion<int> out;
  const int m = g.m();
  out.edge_vertices = m;
  out.copy_of.assign(static_cast<std::size_t>(g.n()), -1);
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(g.n()));
  for (int i = 0; i < m; ++i) {
    const auto& e = g.edges()[static_cast<std::size_t>(i)];
    incident[static_cast<std::size_t>(e.u)].push_back(i);
    incident[static_cast<std::size_t>(e.v)].push_back(i);
  }
  std::vector<Edge> edges;
  for (const auto& inc : incident) {
    for (std::size_t a = 0; a < inc.size(); ++a) {
      for (std::size_t b = a + 1; b < inc.size(); ++b) edges.emplace_back(inc[a], inc[b]);
    }
  }
  int next = m;
  for (Vertex t : terminals) {
    out.copy_of[static_cast<std::size_t>(t)] = next;
    for (int i : incident[static_cast<std::size_t>(t)]) edges.emplace_back(next, i);
    ++next;
  }
  out.graph = Graph(next, normalized(std::move(edges)));
  return out;
}

template <typename Spec>
LineGraphExpansion<Spec> with_terminals(LineGraphExpansion<int>&& core, Spec spec) {
  LineGraphExpansion<Spec> out;
  out.graph = std::move(core.graph);
  out.copy_of = std::move(core.copy_of);
  out.edge_vertices = core.edge_vertices;
  out.terminals = std::move(spec);
  return out;
}

}  // namespace detail

inline LineGraphExpansion<TerminalPairs> line_graph_expand(const Graph& g, const TerminalPairs& b) {
  b.validate_against(g);
  auto core = detail::line_graph_core(g, b.terminals());
  std::vector<TerminalPair> pairs;
  for (const auto& p : b.pairs()) {
    pairs.emplace_back(core.copy_of[static_cast<std::size_t>(p.u)], core.copy_of[static_cast<std::size_t>(p.v)]);
  }
  return detail::with_terminals(std::move(core), TerminalPairs(std::move(pairs)));
}

inline LineGraphExpansion<OrderedTerminals> line_graph_expand(const Graph& g, const OrderedTerminals& t) {
  t.validate_against(g);
  auto core = detail::line_graph_core(g, t.sorted());
  std::vector<Vertex> order;
  for (Vertex x : t.order()) order.push_back(core.copy_of[static_cast<std::size_t>(x)]);
  return detail::with_terminals(std::move(core), OrderedTerminals(std::move(order)));
}

}  // namespace mcut

#endif  // MCUT_LINE_GRAPH_HPP
