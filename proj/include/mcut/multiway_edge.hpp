#ifndef MCUT_MULTIWAY_EDGE_HPP
#define MCUT_MULTIWAY_EDGE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mcut/graph.hpp"
#include "mcut/multicut.hpp"
#include "mcut/solution.hpp"
#include "mcut/terminals.hpp"

// Reverse search over minimal edge multiway cuts, represented as ordered
// partitions (C_1, ..., C_k) of V with t_i in C_i and every block connected.
// Block indices are 0-based throughout.
namespace mcut {

namespace detail {

inline std::vector<char> complement_mask(int n, const std::vector<char>& blocked) {
  std::vector<char> out(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = !blocked[i];
  return out;
}

// Component of `root` in G[block \ {removed}].
inline VertexSet component_without(const Graph& g, const VertexSet& block, Vertex removed, Vertex root) {
  auto inside = membership_mask(g.n(), block);
  inside[static_cast<std::size_t>(removed)] = 0;
  return component_within(g, inside, root);
}

}  // namespace detail

// C^r_i = component of t_i in G - (C^r_1 + ... + C^r_{i-1} + {t_{i+1}, ..., t_k}).
inline OrderedPartition compute_root(const Graph& g, const OrderedTerminals& t) {
  t.validate_against(g);
  if (!g.connected()) throw InputError("compute_root: graph is disconnected");
  if (t.k() == 0) throw InputError("compute_root: no terminals");
  std::vector<char> blocked(static_cast<std::size_t>(g.n()), 0);
  for (Vertex x : t.order()) blocked[static_cast<std::size_t>(x)] = 1;
  std::vector<VertexSet> blocks;
  for (int i = 0; i < t.k(); ++i) {
    blocked[static_cast<std::size_t>(t[i])] = 0;
    auto block = component_within(g, detail::complement_mask(g.n(), blocked), t[i]);
    for (Vertex v : block) blocked[static_cast<std::size_t>(v)] = 1;
    blocks.push_back(std::move(block));
  }
  return OrderedPartition::from_blocks(g.n(), std::move(blocks));
}

// depth(M) = sum over v of (P_M(v) - P_R(v)).
inline std::int64_t depth(const OrderedPartition& p, const OrderedPartition& root) {
  if (p.position.size() != root.position.size()) throw InputError("depth: partitions over different graphs");
  std::int64_t d = 0;
  for (std::size_t v = 0; v < p.position.size(); ++v) d += p.position[v] - root.position[v];
  return d;
}

struct Shift {
  Vertex vertex;
  int target;  // block index the vertex can be shifted into

  friend bool operator==(const Shift&, const Shift&) = default;
  friend auto operator<=>(const Shift&, const Shift&) = default;
};

// All (v, i): v a non-terminal in some C_j, j > i, adjacent to C_i.
inline std::vector<Shift> shiftable_vertices(const Graph& g, const OrderedTerminals& t, const OrderedPartition& p) {
  std::vector<Shift> out;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (t.is_terminal(v)) continue;
    const int j = p.of(v);
    instrument::charge(1 + g.neighbors(v).size());
    for (Vertex y : g.neighbors(v)) {
      if (p.of(y) < j) out.push_back({v, p.of(y)});
    }
  }
  return normalized(std::move(out));
}

struct PivotChoice {
  Vertex pivot;
  int li;      // largest block index receiving a shiftable vertex
  int source;  // block of the pivot

  friend bool operator==(const PivotChoice&, const PivotChoice&) = default;
};

// Canonical pivot of a non-root partition:
//  1. Q = vertices shiftable into C_li;
//  2. keep those in the last block C_s that meets Q;
//  3. prefer non-cut vertices of G[C_s]; if all are cut vertices, drop every
//     v that lies on all paths from some other w in Q to t_s;
//  4. take the smallest id.
inline PivotChoice select_pivot(const Graph& g, const OrderedTerminals& t, const OrderedPartition& p) {
  auto shifts = shiftable_vertices(g, t, p);
  if (shifts.empty()) throw InputError("select_pivot: partition is the root");
  int li = -1;
  for (const auto& s : shifts) li = std::max(li, s.target);
  VertexSet q;
  for (const auto& s : shifts) {
    if (s.target == li) q.push_back(s.vertex);
  }
  q = normalized(std::move(q));

  int source = -1;
  for (Vertex v : q) source = std::max(source, p.of(v));
  std::erase_if(q, [&](Vertex v) { return p.of(v) != source; });

  if (q.size() > 1) {
    const VertexSet& block = p.blocks[static_cast<std::size_t>(source)];
    const VertexSet cuts = articulation_points(g, block);
    VertexSet non_cut = set_difference(q, cuts);
    if (!non_cut.empty()) {
      q = std::move(non_cut);
    } else {
      const Vertex anchor = t[source];
      VertexSet deepest;
      for (Vertex v : q) {
        VertexSet reach = detail::component_without(g, block, v, anchor);
        bool dominates = std::any_of(q.begin(), q.end(), [&](Vertex w) { return w != v && !contains(reach, w); });
        if (!dominates) deepest.push_back(v);
      }
      q = std::move(deepest);
    }
  }
  return {q.front(), li, source};
}

// Par(M): the pivot p leaves C_s together with everything it cuts off from
// t_s, and all of it joins C_li.
inline OrderedPartition parent(const Graph& g, const OrderedTerminals& t, const OrderedPartition& p) {
  const auto pc = select_pivot(g, t, p);
  const VertexSet& source = p.blocks[static_cast<std::size_t>(pc.source)];
  VertexSet stay = detail::component_without(g, source, pc.pivot, t[pc.source]);
  auto blocks = p.blocks;
  blocks[static_cast<std::size_t>(pc.li)] = set_union(blocks[static_cast<std::size_t>(pc.li)], set_difference(source, stay));
  blocks[static_cast<std::size_t>(pc.source)] = std::move(stay);
  return OrderedPartition::from_blocks(g.n(), std::move(blocks));
}

// Boundary of C: vertices of C with a neighbour outside C.
inline VertexSet boundary(const Graph& g, const OrderedPartition& p, int i) {
  VertexSet out;
  for (Vertex v : p.blocks[static_cast<std::size_t>(i)]) {
    instrument::charge(1 + g.neighbors(v).size());
    for (Vertex y : g.neighbors(v)) {
      if (p.of(y) != i) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

// Resumable iteration over the children of one partition. For each block
// C_i, each boundary vertex v != t_i and each j > i with N(v) n C_j
// non-empty, v and the pieces of G[C_i \ {v}] cut off from t_i move into
// C_j; the candidate is a child iff its parent is the current partition.
class ChildCursor {
 public:
  std::optional<OrderedPartition> next(const Graph& g, const OrderedTerminals& t, const OrderedPartition& p) {
    const int k = p.k();
    for (;;) {
      if (!have_vertex_) {
        if (!have_boundary_) {
          if (i_ >= k) return std::nullopt;
          boundary_ = boundary(g, p, i_);
          std::erase(boundary_, t[i_]);
          bi_ = 0;
          have_boundary_ = true;
        }
        if (bi_ >= boundary_.size()) {
          ++i_;
          have_boundary_ = false;
          continue;
        }
        v_ = boundary_[bi_++];
        const VertexSet& block = p.blocks[static_cast<std::size_t>(i_)];
        kept_ = detail::component_without(g, block, v_, t[i_]);
        moved_ = set_difference(block, kept_);
        j_ = i_ + 1;
        have_vertex_ = true;
      }
      while (j_ < k) {
        const int j = j_++;
        if (!intersects(g.neighbors(v_), p.blocks[static_cast<std::size_t>(j)])) continue;
        auto blocks = p.blocks;
        blocks[static_cast<std::size_t>(i_)] = kept_;
        blocks[static_cast<std::size_t>(j)] = set_union(blocks[static_cast<std::size_t>(j)], moved_);
        auto candidate = OrderedPartition::from_blocks(g.n(), std::move(blocks));
        if (parent(g, t, candidate) == p) return candidate;
      }
      have_vertex_ = false;
    }
  }

  std::size_t footprint() const { return boundary_.size() + kept_.size() + moved_.size(); }

 private:
  int i_ = 0;
  bool have_boundary_ = false;
  VertexSet boundary_;
  std::size_t bi_ = 0;
  bool have_vertex_ = false;
  Vertex v_ = -1;
  VertexSet kept_;
  VertexSet moved_;
  int j_ = 0;
};

template <typename Visitor>
void children_stream(const Graph& g, const OrderedTerminals& t, const OrderedPartition& p, Visitor&& visit) {
  ChildCursor cursor;
  while (auto child = cursor.next(g, t, p)) {
    if (!visit(static_cast<const OrderedPartition&>(*child))) return;
  }
}

// One step of the Euler tour over the reverse-search tree.
struct TourEvent {
  std::uint64_t node;
  int depth;
  bool emits;
};

struct ReverseSearchStats {
  std::size_t peak_frames = 0;
  std::size_t peak_retained = 0;  // vertex ids held across all frames
};

// Depth-first reverse search from the root with an explicit stack. A node at
// even depth is emitted when entered and a node at odd depth when left, so
// at least one of any three consecutive tour events emits. No visited set is
// kept: every partition has exactly one parent.
class EdgeMultiwayEnumerator {
 public:
  EdgeMultiwayEnumerator(const Graph& g, OrderedTerminals t, bool record_tour = false)
      : g_(&g), t_(std::move(t)), record_tour_(record_tour) {
    t_.validate_against(g);
    if (!g.connected()) throw InputError("edge multiway enumeration needs a connected graph");
  }

  std::optional<OrderedPartition> next_partition() {
    if (!started_) {
      started_ = true;
      if (t_.k() == 0) return std::nullopt;
      push(compute_root(*g_, t_), 0);
      if (emit_on_entry(0)) return emit(stack_.back());
    }
    while (!stack_.empty()) {
      auto child = stack_.back().cursor.next(*g_, t_, stack_.back().partition);
      if (child) {
        const int d = stack_.back().depth + 1;
        push(std::move(*child), d);
        if (emit_on_entry(d)) return emit(stack_.back());
        continue;
      }
      Frame done = std::move(stack_.back());
      stack_.pop_back();
      if (!stack_.empty()) record(stack_.back(), false);
      if (!emit_on_entry(done.depth)) {
        mark_last_event_of(done.id);
        return emit(done);
      }
    }
    return std::nullopt;
  }

  // The edge set of the next minimal edge multiway cut.
  std::optional<EdgeSet> next() {
    if (t_.k() == 0) {
      if (started_) return std::nullopt;
      started_ = true;
      return EdgeSet{};
    }
    auto p = next_partition();
    if (!p) return std::nullopt;
    return p->cut_edges(*g_);
  }

  const ReverseSearchStats& stats() const { return stats_; }
  const std::vector<TourEvent>& tour() const { return tour_; }

 private:
  struct Frame {
    OrderedPartition partition;
    int depth;
    std::uint64_t id;
    ChildCursor cursor;
  };

  static bool emit_on_entry(int d) { return d % 2 == 0; }

  void push(OrderedPartition p, int d) {
    stack_.push_back({std::move(p), d, next_id_++, {}});
    record(stack_.back(), emit_on_entry(d));
  }

  void record(const Frame& f, bool emits) {
    if (record_tour_) tour_.push_back({f.id, f.depth, emits});
  }

  void mark_last_event_of(std::uint64_t id) {
    if (!record_tour_) return;
    for (auto it = tour_.rbegin(); it != tour_.rend(); ++it) {
      if (it->node == id) {
        it->emits = true;
        return;
      }
    }
  }

  OrderedPartition emit(const Frame& f) {
    stats_.peak_frames = std::max(stats_.peak_frames, stack_.size());
    // Each partition holds n block entries plus n positions.
    std::size_t retained = 2 * f.partition.position.size();
    for (const auto& fr : stack_) retained += 2 * fr.partition.position.size() + fr.cursor.footprint();
    stats_.peak_retained = std::max(stats_.peak_retained, retained);
    return f.partition;
  }

  const Graph* g_;
  OrderedTerminals t_;
  bool record_tour_;
  bool started_ = false;
  std::vector<Frame> stack_;
  std::uint64_t next_id_ = 0;
  std::vector<TourEvent> tour_;
  ReverseSearchStats stats_;
};

template <typename Visitor>
EnumerationStatus enumerate_minimal_edge_multiway(const Graph& g, const OrderedTerminals& t, Visitor&& visit) {
  EdgeMultiwayEnumerator e(g, t);
  while (auto cut = e.next()) {
    if (!visit(static_cast<const EdgeSet&>(*cut))) return EnumerationStatus::kStopped;
  }
  return EnumerationStatus::kComplete;
}

}  // namespace mcut

#endif  // MCUT_MULTIWAY_EDGE_HPP
