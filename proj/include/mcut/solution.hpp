#ifndef MCUT_SOLUTION_HPP
#define MCUT_SOLUTION_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "mcut/graph.hpp"
#include "mcut/terminals.hpp"

namespace mcut {

// Raised when an operation that requires a cut is handed a non-cut.
class NotACutError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void reject_terminals(const VertexSet& m, const VertexSet& terminals) {
  if (intersects(m, terminals)) throw InputError("node cut contains a terminal");
}

inline bool pairs_separated(const TerminalPairs& b, const ComponentLabels& labels) {
  for (const auto& p : b.pairs()) {
    if (labels.of(p.u) == labels.of(p.v)) return false;
  }
  return true;
}

}  // namespace detail

// ---------------------------------------------------------------- multicuts

inline bool is_node_multicut(const Graph& g, const TerminalPairs& b, const VertexSet& m) {
  detail::reject_terminals(m, b.terminals());
  return detail::pairs_separated(b, label_components_minus(g, m));
}

struct FamilyMember {
  VertexSet component;
  VertexSet terminals;  // terminals inside the component

  friend bool operator==(const FamilyMember&, const FamilyMember&) = default;
};

// C_M: the components of G - m that contain at least one terminal.
using ComponentFamily = std::vector<FamilyMember>;

inline ComponentFamily component_family(const Graph& g, const TerminalPairs& b, const VertexSet& m) {
  detail::reject_terminals(m, b.terminals());
  auto labels = label_components_minus(g, m);
  if (!detail::pairs_separated(b, labels)) throw NotACutError("component_family: not a node multicut");
  std::vector<VertexSet> inside(labels.sets.size());
  for (Vertex t : b.terminals()) inside[static_cast<std::size_t>(labels.of(t))].push_back(t);
  ComponentFamily family;
  for (std::size_t c = 0; c < labels.sets.size(); ++c) {
    if (!inside[c].empty()) family.push_back({labels.sets[c], inside[c]});
  }
  return family;
}

// Local characterisation of minimality: every v in m sees both sides of some
// terminal pair. Returns false for non-multicuts.
inline bool check_minimal_node_multicut(const Graph& g, const TerminalPairs& b, const VertexSet& m) {
  detail::reject_terminals(m, b.terminals());
  auto labels = label_components_minus(g, m);
  if (!detail::pairs_separated(b, labels)) return false;
  std::vector<char> seen(labels.sets.size(), 0);
  for (Vertex v : m) {
    for (Vertex y : g.neighbors(v)) {
      if (labels.of(y) >= 0) seen[static_cast<std::size_t>(labels.of(y))] = 1;
    }
    bool witnessed = false;
    for (const auto& p : b.pairs()) {
      if (seen[static_cast<std::size_t>(labels.of(p.u))] && seen[static_cast<std::size_t>(labels.of(p.v))]) {
        witnessed = true;
        break;
      }
    }
    for (Vertex y : g.neighbors(v)) {
      if (labels.of(y) >= 0) seen[static_cast<std::size_t>(labels.of(y))] = 0;
    }
    if (!witnessed) return false;
  }
  return true;
}

// comp(): shrinks a node multicut to a minimal one, dropping vertices in
// ascending order whenever the remainder still separates every pair.
inline VertexSet comp_minimalize_multicut(const Graph& g, const TerminalPairs& b, VertexSet m) {
  if (!is_node_multicut(g, b, m)) throw NotACutError("comp: not a node multicut");
  auto in_cut = membership_mask(g.n(), m);
  for (Vertex v : VertexSet(m)) {
    in_cut[static_cast<std::size_t>(v)] = 0;
    if (!detail::pairs_separated(b, label_components(g, in_cut))) in_cut[static_cast<std::size_t>(v)] = 1;
  }
  VertexSet out;
  for (Vertex v : m) {
    if (in_cut[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

// dist(M, M') = sum over C' in C_{M'} of |C' \ mcc(C', M)|, where mcc picks
// the component of G - M minimising |C' \ C|, ties to the smallest vertex.
inline int dist_multicut(const Graph& g, const TerminalPairs& b, const VertexSet& m, const VertexSet& target) {
  auto family = component_family(g, b, target);
  auto labels = label_components_minus(g, m);
  if (!detail::pairs_separated(b, labels)) throw NotACutError("dist: not a node multicut");
  int total = 0;
  std::vector<int> overlap(labels.sets.size(), 0);
  for (const auto& member : family) {
    std::fill(overlap.begin(), overlap.end(), 0);
    for (Vertex x : member.component) {
      if (labels.of(x) >= 0) ++overlap[static_cast<std::size_t>(labels.of(x))];
    }
    // |C' \ C| = |C'| - |C' n C|. The smallest-vertex tie-break picks among
    // equal values, so only the maximum overlap matters here.
    int best = 0;
    for (std::size_t c = 0; c < overlap.size(); ++c) {
      best = std::max(best, overlap[c]);
    }
    total += static_cast<int>(member.component.size()) - best;
  }
  return total;
}

// ------------------------------------------------------------ multiway cuts

// Terminal components (C_1, ..., C_k) of a node multiway cut, indexed like
// the terminal order.
using MultiwayFamily = std::vector<VertexSet>;

inline bool is_node_multiway_cut(const Graph& g, const OrderedTerminals& t, const VertexSet& m) {
  detail::reject_terminals(m, t.sorted());
  auto labels = label_components_minus(g, m);
  std::vector<char> used(labels.sets.size(), 0);
  for (Vertex x : t.order()) {
    auto& u = used[static_cast<std::size_t>(labels.of(x))];
    if (u) return false;
    u = 1;
  }
  return true;
}

inline MultiwayFamily multiway_family(const Graph& g, const OrderedTerminals& t, const VertexSet& m) {
  if (!is_node_multiway_cut(g, t, m)) throw NotACutError("multiway_family: not a node multiway cut");
  auto labels = label_components_minus(g, m);
  MultiwayFamily family;
  for (Vertex x : t.order()) family.push_back(labels.sets[static_cast<std::size_t>(labels.of(x))]);
  return family;
}

inline bool check_minimal_node_multiway(const Graph& g, const OrderedTerminals& t, const VertexSet& m) {
  if (!is_node_multiway_cut(g, t, m)) return false;
  auto labels = label_components_minus(g, m);
  std::vector<int> terminal_index(labels.sets.size(), -1);
  for (int i = 0; i < t.k(); ++i) terminal_index[static_cast<std::size_t>(labels.of(t[i]))] = i;
  for (Vertex v : m) {
    int first = -1;
    bool two = false;
    for (Vertex y : g.neighbors(v)) {
      if (labels.of(y) < 0) continue;
      int i = terminal_index[static_cast<std::size_t>(labels.of(y))];
      if (i < 0) continue;
      if (first < 0) {
        first = i;
      } else if (i != first) {
        two = true;
        break;
      }
    }
    if (!two) return false;
  }
  return true;
}

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), tag_(n, -1) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }

  // Attaches b under a; a's tag wins unless it is unset.
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (tag_[static_cast<std::size_t>(a)] < 0) tag_[static_cast<std::size_t>(a)] = tag_[static_cast<std::size_t>(b)];
    parent_[static_cast<std::size_t>(b)] = a;
  }

  int& tag(int root) { return tag_[static_cast<std::size_t>(root)]; }

 private:
  std::vector<int> parent_;
  std::vector<int> tag_;
};

}  // namespace detail

// comp() for node multiway cuts in near-linear time: one ascending pass over
// m, maintaining a terminal index per component of G - m and merging
// components whenever a vertex is released back into the graph.
inline VertexSet comp_minimalize_multiway(const Graph& g, const OrderedTerminals& t, const VertexSet& m) {
  if (!is_node_multiway_cut(g, t, m)) throw NotACutError("comp: not a node multiway cut");
  auto labels = label_components_minus(g, m);
  const auto comps = static_cast<std::size_t>(labels.count());
  detail::DisjointSets dsu(comps + m.size());
  for (int i = 0; i < t.k(); ++i) dsu.tag(labels.of(t[i])) = i;

  // Node id of every vertex outside the current cut; -1 while in the cut.
  std::vector<int> node(labels.label);
  VertexSet kept;
  std::vector<int> roots;
  for (std::size_t idx = 0; idx < m.size(); ++idx) {
    const Vertex v = m[idx];
    instrument::charge(1 + g.neighbors(v).size());
    roots.clear();
    int seen_tag = -1;
    bool separating = false;
    for (Vertex y : g.neighbors(v)) {
      int ny = node[static_cast<std::size_t>(y)];
      if (ny < 0) continue;
      int r = dsu.find(ny);
      roots.push_back(r);
      int tg = dsu.tag(r);
      if (tg < 0) continue;
      if (seen_tag < 0) {
        seen_tag = tg;
      } else if (tg != seen_tag) {
        separating = true;
        break;
      }
    }
    if (separating) {
      kept.push_back(v);
      continue;
    }
    const int self = static_cast<int>(comps + idx);
    node[static_cast<std::size_t>(v)] = self;
    for (int r : roots) dsu.unite(self, r);
  }
  return kept;
}

// dist(M, M') = sum_i |C'_i \ C_i| with `from` = C_M and `to` = C_{M'}.
inline int dist_multiway(const MultiwayFamily& from, const MultiwayFamily& to) {
  if (from.size() != to.size()) throw InputError("dist_multiway: terminal counts differ");
  int total = 0;
  for (std::size_t i = 0; i < from.size(); ++i) total += static_cast<int>(set_difference(to[i], from[i]).size());
  return total;
}

// Minimal edge multiway cut iff G - f has exactly k components, one per
// terminal, and every edge of f joins two of them.
inline bool check_minimal_edge_multiway(const Graph& g, const OrderedTerminals& t, const EdgeSet& f) {
  for (const auto& e : f) {
    if (!g.has_edge(e)) return false;
  }
  auto comps = components_minus_edges(g, normalized(f));
  if (static_cast<int>(comps.size()) != t.k()) return false;
  std::vector<char> used(comps.size(), 0);
  for (Vertex x : t.order()) {
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (contains(comps[c], x)) {
        if (used[c]) return false;
        used[c] = 1;
      }
    }
  }
  std::vector<int> where(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (Vertex v : comps[c]) where[static_cast<std::size_t>(v)] = static_cast<int>(c);
  }
  for (const auto& e : f) {
    if (where[static_cast<std::size_t>(e.u)] == where[static_cast<std::size_t>(e.v)]) return false;
  }
  return true;
}

// ------------------------------------------------------ ordered partitions

// (C_1, ..., C_k) with t_i in C_i and every G[C_i] connected; the position
// array answers P(v) in O(1). Indices are 0-based.
struct OrderedPartition {
  std::vector<VertexSet> blocks;
  std::vector<int> position;

  static OrderedPartition from_blocks(int n, std::vector<VertexSet> blocks) {
    OrderedPartition p;
    p.position.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      blocks[i] = normalized(std::move(blocks[i]));
      for (Vertex v : blocks[i]) {
        if (v < 0 || v >= n) throw InputError("partition: vertex out of range");
        if (p.position[static_cast<std::size_t>(v)] >= 0) throw InputError("partition: blocks overlap");
        p.position[static_cast<std::size_t>(v)] = static_cast<int>(i);
      }
    }
    for (int pos : p.position) {
      if (pos < 0) throw InputError("partition: blocks do not cover V");
    }
    p.blocks = std::move(blocks);
    return p;
  }

  int k() const { return static_cast<int>(blocks.size()); }
  int of(Vertex v) const { return position[static_cast<std::size_t>(v)]; }

  friend bool operator==(const OrderedPartition& a, const OrderedPartition& b) { return a.position == b.position; }

  // Edges between different blocks: the corresponding edge multiway cut.
  EdgeSet cut_edges(const Graph& g) const {
    EdgeSet out;
    for (const auto& e : g.edges()) {
      if (of(e.u) != of(e.v)) out.push_back(e);
    }
    return out;
  }

  // Valid iff t_i in C_i and each block induces a connected subgraph.
  bool valid_for(const Graph& g, const OrderedTerminals& t) const {
    if (k() != t.k()) return false;
    for (int i = 0; i < k(); ++i) {
      if (of(t[i]) != i) return false;
      std::vector<char> inside(static_cast<std::size_t>(g.n()), 0);
      for (Vertex v : blocks[static_cast<std::size_t>(i)]) inside[static_cast<std::size_t>(v)] = 1;
      if (component_within(g, inside, t[i]).size() != blocks[static_cast<std::size_t>(i)].size()) return false;
    }
    return true;
  }
};

// ------------------------------------------------------------ canonical keys

namespace detail {

inline void put_u32(std::string& out, std::uint32_t x) {
  out.push_back(static_cast<char>((x >> 24) & 0xff));
  out.push_back(static_cast<char>((x >> 16) & 0xff));
  out.push_back(static_cast<char>((x >> 8) & 0xff));
  out.push_back(static_cast<char>(x & 0xff));
}

}  // namespace detail

// 4-byte big-endian element count followed by each element as a 4-byte
// big-endian integer, in ascending order.
inline std::string canonical_key(const VertexSet& s) {
  auto sorted = normalized(s);
  std::string out;
  out.reserve(4 + 4 * sorted.size());
  detail::put_u32(out, static_cast<std::uint32_t>(sorted.size()));
  for (Vertex v : sorted) detail::put_u32(out, static_cast<std::uint32_t>(v));
  return out;
}

// Edges are encoded as two integers, smaller first.
inline std::string canonical_key(const EdgeSet& f) {
  auto sorted = normalized(f);
  std::string out;
  out.reserve(4 + 8 * sorted.size());
  detail::put_u32(out, static_cast<std::uint32_t>(sorted.size()));
  for (const auto& e : sorted) {
    detail::put_u32(out, static_cast<std::uint32_t>(e.u));
    detail::put_u32(out, static_cast<std::uint32_t>(e.v));
  }
  return out;
}

}  // namespace mcut

#endif  // MCUT_SOLUTION_HPP
