#ifndef MCUT_GRAPH_HPP
#define MCUT_GRAPH_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mcut/instrument.hpp"

namespace mcut {

using Vertex = int;

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u = 0;  // u < v
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Sorted list of edges of some host graph.
using EdgeSet = std::vector<Edge>;

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <typename T>
std::vector<T> normalized(std::vector<T> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

template <typename T>
bool contains(std::span<const T> sorted, const T& x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

inline bool contains(const VertexSet& s, Vertex x) {
  return std::binary_search(s.begin(), s.end(), x);
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool intersects(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  Graph(int n, std::vector<Edge> edges) : n_(n), adj_(static_cast<std::size_t>(n)) {
    if (n < 0) throw InputError("negative vertex count");
    for (auto& e : edges) {
      if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
      if (e.u < 0 || e.v >= n) {
        throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         ") out of range");
      }
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
      throw InputError("parallel edge");
    }
    edges_ = std::move(edges);
    for (const auto& e : edges_) {
      adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
      adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
    connected_ = compute_connected();
  }

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const EdgeSet& edges() const { return edges_; }
  const VertexSet& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool connected() const { return connected_; }

  bool adjacent(Vertex a, Vertex b) const { return contains(neighbors(a), b); }

  bool has_edge(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
  }

  // Index of e in edges(), or -1.
  int edge_index(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return static_cast<int>(it - edges_.begin());
  }

  VertexSet all_vertices() const {
    VertexSet all(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) all[static_cast<std::size_t>(v)] = v;
    return all;
  }

 private:
  bool compute_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : neighbors(x)) {
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          ++count;
          stack.push_back(y);
        }
      }
    }
    return count == n_;
  }

  int n_ = 0;
  EdgeSet edges_;
  std::vector<VertexSet> adj_;
  bool connected_ = true;
};

inline std::vector<char> membership_mask(int n, const VertexSet& s) {
  std::vector<char> mask(static_cast<std::size_t>(n), 0);
  for (Vertex v : s) mask[static_cast<std::size_t>(v)] = 1;
  return mask;
}

// Component labelling of the subgraph induced by the unblocked vertices.
// Components are numbered in order of their smallest vertex; blocked
// vertices get label -1.
struct ComponentLabels {
  std::vector<int> label;
  std::vector<VertexSet> sets;

  int of(Vertex v) const { return label[static_cast<std::size_t>(v)]; }
  int count() const { return static_cast<int>(sets.size()); }
};

inline ComponentLabels label_components(const Graph& g, std::span<const char> blocked) {
  ComponentLabels out;
  out.label.assign(static_cast<std::size_t>(g.n()), -1);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (blocked[static_cast<std::size_t>(s)] || out.label[static_cast<std::size_t>(s)] >= 0) {
      continue;
    }
    const int id = out.count();
    out.label[static_cast<std::size_t>(s)] = id;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      instrument::charge(1 + g.neighbors(x).size());
      for (Vertex y : g.neighbors(x)) {
        auto& l = out.label[static_cast<std::size_t>(y)];
        if (l < 0 && !blocked[static_cast<std::size_t>(y)]) {
          l = id;
          queue.push_back(y);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    out.sets.push_back(queue);
  }
  return out;
}

inline ComponentLabels label_components_minus(const Graph& g, const VertexSet& removed) {
  auto mask = membership_mask(g.n(), removed);
  return label_components(g, mask);
}

// Connected components of G - removed, ordered by smallest vertex.
inline std::vector<VertexSet> components_minus_vertices(const Graph& g, const VertexSet& removed) {
  return label_components_minus(g, removed).sets;
}

// Connected components of (V, E \ removed), ordered by smallest vertex.
inline std::vector<VertexSet> components_minus_edges(const Graph& g, const EdgeSet& removed) {
  std::vector<int> label(static_cast<std::size_t>(g.n()), -1);
  std::vector<VertexSet> sets;
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    const int id = static_cast<int>(sets.size());
    label[static_cast<std::size_t>(s)] = id;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      instrument::charge(1 + g.neighbors(x).size());
      for (Vertex y : g.neighbors(x)) {
        if (label[static_cast<std::size_t>(y)] >= 0) continue;
        if (std::binary_search(removed.begin(), removed.end(), Edge(x, y))) continue;
        label[static_cast<std::size_t>(y)] = id;
        queue.push_back(y);
      }
    }
    std::sort(queue.begin(), queue.end());
    sets.push_back(queue);
  }
  return sets;
}

// The component of G[within] containing `root`. `root` must be in `within`.
inline VertexSet component_within(const Graph& g, std::span<const char> within, Vertex root) {
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  VertexSet queue{root};
  seen[static_cast<std::size_t>(root)] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    instrument::charge(1 + g.neighbors(x).size());
    for (Vertex y : g.neighbors(x)) {
      auto yi = static_cast<std::size_t>(y);
      if (within[yi] && !seen[yi]) {
        seen[yi] = 1;
        queue.push_back(y);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

// N(X): vertices outside X with a neighbour in X.
inline VertexSet neighbors_of_set(const Graph& g, const VertexSet& x) {
  auto in_x = membership_mask(g.n(), x);
  VertexSet out;
  for (Vertex v : x) {
    instrument::charge(1 + g.neighbors(v).size());
    for (Vertex y : g.neighbors(v)) {
      if (!in_x[static_cast<std::size_t>(y)]) out.push_back(y);
    }
  }
  return normalized(std::move(out));
}

// Cut vertices of G[within]. Throws if G[within] is disconnected.
inline VertexSet articulation_points(const Graph& g, const VertexSet& within) {
  if (within.empty()) return {};
  auto inside = membership_mask(g.n(), within);
  const auto n = static_cast<std::size_t>(g.n());
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<char> is_cut(n, 0);
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  const Vertex root = within.front();
  int timer = 0;
  int root_children = 0;
  std::vector<Frame> stack{{root, -1, 0}};
  disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
  while (!stack.empty()) {
    auto& f = stack.back();
    const auto& nb = g.neighbors(f.v);
    instrument::charge();
    if (f.next < nb.size()) {
      Vertex y = nb[f.next++];
      auto yi = static_cast<std::size_t>(y);
      if (!inside[yi] || y == f.parent) continue;
      if (disc[yi] < 0) {
        disc[yi] = low[yi] = timer++;
        if (f.v == root) ++root_children;
        stack.push_back({y, f.v, 0});
      } else {
        low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], disc[yi]);
      }
    } else {
      Frame done = f;
      stack.pop_back();
      if (done.parent >= 0) {
        auto pi = static_cast<std::size_t>(done.parent);
        auto vi = static_cast<std::size_t>(done.v);
        low[pi] = std::min(low[pi], low[vi]);
        if (done.parent != root && low[vi] >= disc[pi]) is_cut[pi] = 1;
      }
    }
  }
  if (timer != static_cast<int>(within.size())) {
    throw InputError("articulation_points: induced subgraph is disconnected");
  }
  if (root_children > 1) is_cut[static_cast<std::size_t>(root)] = 1;
  VertexSet out;
  for (Vertex v : within) {
    if (is_cut[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

// A graph together with the map from its vertices back to the host graph.
struct MappedGraph {
  Graph graph;
  std::vector<Vertex> to_host;  // new vertex -> host vertex
};

// G[x], relabelled 0..|x|-1 in ascending order of host id.
inline MappedGraph induced_subgraph(const Graph& g, const VertexSet& x) {
  std::vector<int> index(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < x.size(); ++i) index[static_cast<std::size_t>(x[i])] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (Vertex v : x) {
    for (Vertex y : g.neighbors(v)) {
      if (v < y && index[static_cast<std::size_t>(y)] >= 0) {
        edges.emplace_back(index[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(y)]);
      }
    }
  }
  return {Graph(static_cast<int>(x.size()), std::move(edges)), VertexSet(x)};
}

struct Contraction {
  Graph graph;
  std::vector<Vertex> mapping;  // old vertex -> new vertex (total)
  Vertex merged = -1;           // the new vertex standing for x
};

// Identifies all of x into one vertex. Old vertices are renumbered in
// ascending order; the merged vertex takes the slot of min(x). Loops and
// parallel edges created by the identification are dropped.
inline Contraction contract_set(const Graph& g, const VertexSet& x) {
  if (x.empty()) throw InputError("contract_set: empty set");
  auto in_x = membership_mask(g.n(), x);
  Contraction out;
  out.mapping.assign(static_cast<std::size_t>(g.n()), -1);
  int next = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (in_x[static_cast<std::size_t>(v)]) {
      if (out.merged < 0) out.merged = next++;
      out.mapping[static_cast<std::size_t>(v)] = out.merged;
    } else {
      out.mapping[static_cast<std::size_t>(v)] = next++;
    }
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    Vertex a = out.mapping[static_cast<std::size_t>(e.u)];
    Vertex b = out.mapping[static_cast<std::size_t>(e.v)];
    if (a != b) edges.emplace_back(a, b);
  }
  out.graph = Graph(next, normalized(std::move(edges)));
  return out;
}

}  // namespace mcut

#endif  // MCUT_GRAPH_HPP
