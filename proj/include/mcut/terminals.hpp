#ifndef MCUT_TERMINALS_HPP
#define MCUT_TERMINALS_HPP

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mcut/graph.hpp"

namespace mcut {

using TerminalPair = Edge;  // unordered pair {s, t}, s < t

// A set B of terminal pairs (multicut modes).
class TerminalPairs {
 public:
  TerminalPairs() = default;

  explicit TerminalPairs(std::vector<TerminalPair> pairs) {
    for (const auto& p : pairs) {
      if (p.u == p.v) throw InputError("terminal pair with identical endpoints " + std::to_string(p.u));
      if (p.u < 0) throw InputError("negative terminal id");
    }
    pairs_ = normalized(std::move(pairs));
    for (const auto& p : pairs_) {
      terminals_.push_back(p.u);
      terminals_.push_back(p.v);
    }
    terminals_ = normalized(std::move(terminals_));
  }

  const std::vector<TerminalPair>& pairs() const { return pairs_; }

  // T(B)
  const VertexSet& terminals() const { return terminals_; }

  bool empty() const { return pairs_.empty(); }

  bool is_pair(Vertex a, Vertex b) const {
    if (a == b) return false;
    return std::binary_search(pairs_.begin(), pairs_.end(), TerminalPair(a, b));
  }

  void validate_against(const Graph& g) const {
    if (!terminals_.empty() && terminals_.back() >= g.n()) {
      throw InputError("terminal " + std::to_string(terminals_.back()) + " out of range");
    }
  }

 private:
  std::vector<TerminalPair> pairs_;
  VertexSet terminals_;
};

// An ordered terminal list (t_1, ..., t_k) (multiway modes). The order fixes
// the root of the edge multiway reverse search.
class OrderedTerminals {
 public:
  OrderedTerminals() = default;

  explicit OrderedTerminals(std::vector<Vertex> order) : order_(std::move(order)) {
    sorted_ = normalized(order_);
    if (sorted_.size() != order_.size()) throw InputError("duplicate terminal");
    if (!sorted_.empty() && sorted_.front() < 0) throw InputError("negative terminal id");
  }

  int k() const { return static_cast<int>(order_.size()); }
  Vertex operator[](int i) const { return order_[static_cast<std::size_t>(i)]; }
  const std::vector<Vertex>& order() const { return order_; }
  const VertexSet& sorted() const { return sorted_; }
  bool is_terminal(Vertex v) const { return contains(sorted_, v); }

  void validate_against(const Graph& g) const {
    if (!sorted_.empty() && sorted_.back() >= g.n()) {
      throw InputError("terminal " + std::to_string(sorted_.back()) + " out of range");
    }
  }

  // B = T x T
  TerminalPairs all_pairs() const {
    std::vector<TerminalPair> pairs;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      for (std::size_t j = i + 1; j < order_.size(); ++j) pairs.emplace_back(order_[i], order_[j]);
    }
    return TerminalPairs(std::move(pairs));
  }

 private:
  std::vector<Vertex> order_;
  VertexSet sorted_;
};

using TerminalSpec = std::variant<TerminalPairs, OrderedTerminals>;

}  // namespace mcut

#endif  // MCUT_TERMINALS_HPP
