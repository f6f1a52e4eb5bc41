#ifndef MCUT_MULTIWAY_NODE_HPP
#define MCUT_MULTIWAY_NODE_HPP

#include <deque>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mcut/graph.hpp"
#include "mcut/multicut.hpp"
#include "mcut/solution.hpp"
#include "mcut/terminals.hpp"

namespace mcut {

// A minimal node multiway cut together with its terminal components.
struct MultiwaySolution {
  VertexSet cut;
  MultiwayFamily family;

  static MultiwaySolution of(const Graph& g, const OrderedTerminals& t, VertexSet cut) {
    auto family = multiway_family(g, t, cut);
    return {std::move(cut), std::move(family)};
  }
};

// M^{i,v} = (M \ {v}) + union over j != i of (N(v) n C_j): v moves into C_i
// and its neighbours in the other terminal components take its place in the
// cut. Returns nullopt when v is adjacent to a terminal other than t_i.
inline std::optional<VertexSet> shift_candidate(const Graph& g, const OrderedTerminals& t, const MultiwaySolution& sol,
                                                int i, Vertex v) {
  if (!contains(sol.cut, v)) throw InputError("shift_candidate: v is not in the cut");
  if (i < 0 || i >= t.k()) throw InputError("shift_candidate: terminal index out of range");
  for (Vertex y : g.neighbors(v)) {
    if (y != t[i] && t.is_terminal(y)) return std::nullopt;
  }
  VertexSet out = set_difference(sol.cut, {v});
  for (int j = 0; j < t.k(); ++j) {
    if (j == i) continue;
    out = set_union(out, set_intersection(g.neighbors(v), sol.family[static_cast<std::size_t>(j)]));
  }
  return out;
}

// The solution-graph neighbourhood: comp(M^{i,v}) for every v in the cut and
// every admissible i. At most k * |cut| entries.
inline std::vector<MultiwaySolution> neighborhood_multiway_node(const Graph& g, const OrderedTerminals& t,
                                                                const MultiwaySolution& sol) {
  std::vector<MultiwaySolution> out;
  for (Vertex v : sol.cut) {
    for (int i = 0; i < t.k(); ++i) {
      auto shifted = shift_candidate(g, t, sol, i, v);
      if (!shifted) continue;
      out.push_back(MultiwaySolution::of(g, t, comp_minimalize_multiway(g, t, *shifted)));
    }
  }
  return out;
}

// Breadth-first traversal of the node multiway solution graph from
// comp(V \ T). Each cut is returned when it is dequeued and its
// neighbourhood is expanded on the following call, so the work between two
// consecutive results is one neighbourhood computation. The visited set
// grows with the number of solutions.
class NodeMultiwayEnumerator {
 public:
  NodeMultiwayEnumerator(const Graph& g, OrderedTerminals t) : g_(&g), t_(std::move(t)) {
    t_.validate_against(g);
    for (Vertex x : t_.order()) {
      for (Vertex y : g.neighbors(x)) {
        if (t_.is_terminal(y)) feasible_ = false;
      }
    }
  }

  bool feasible() const { return feasible_; }

  std::optional<VertexSet> next() {
    if (!feasible_) return std::nullopt;
    if (!started_) {
      started_ = true;
      VertexSet start = set_difference(g_->all_vertices(), t_.sorted());
      discover(MultiwaySolution::of(*g_, t_, comp_minimalize_multiway(*g_, t_, start)));
    }
    if (last_) {
      for (auto& s : neighborhood_multiway_node(*g_, t_, *last_)) discover(std::move(s));
      last_.reset();
    }
    if (queue_.empty()) return std::nullopt;
    last_ = std::move(queue_.front());
    queue_.pop_front();
    return last_->cut;
  }

  std::size_t visited_size() const { return seen_.size(); }

 private:
  void discover(MultiwaySolution s) {
    auto key = canonical_key(s.cut);
    if (seen_.contains(key)) return;
    seen_.insert(std::move(key));
    queue_.push_back(std::move(s));
  }

  const Graph* g_;
  OrderedTerminals t_;
  bool feasible_ = true;
  bool started_ = false;
  std::optional<MultiwaySolution> last_;
  std::deque<MultiwaySolution> queue_;
  std::unordered_set<std::string> seen_;
};

template <typename Visitor>
EnumerationStatus enumerate_minimal_node_multiway(const Graph& g, const OrderedTerminals& t, Visitor&& visit) {
  NodeMultiwayEnumerator e(g, t);
  if (!e.feasible()) return EnumerationStatus::kInfeasible;
  while (auto cut = e.next()) {
    if (!visit(static_cast<const VertexSet&>(*cut))) return EnumerationStatus::kStopped;
  }
  return EnumerationStatus::kComplete;
}

}  // namespace mcut

#endif  // MCUT_MULTIWAY_NODE_HPP
