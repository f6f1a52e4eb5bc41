#ifndef MCUT_SEPARATORS_HPP
#define MCUT_SEPARATORS_HPP

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mcut/graph.hpp"
#include "mcut/solution.hpp"

namespace mcut {

struct SeparatorInstance {
  Graph graph;
  Vertex a = 0;
  Vertex b = 0;
};

class NoSeparatorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// S is a minimal a-b separator iff the components of a and b in G - S are
// distinct and both have neighbourhood exactly S.
inline bool is_minimal_ab_separator(const SeparatorInstance& inst, const VertexSet& s) {
  const auto& g = inst.graph;
  if (contains(s, inst.a) || contains(s, inst.b)) return false;
  auto labels = label_components_minus(g, s);
  const int ca = labels.of(inst.a);
  const int cb = labels.of(inst.b);
  if (ca == cb) return false;
  return neighbors_of_set(g, labels.sets[static_cast<std::size_t>(ca)]) == s &&
         neighbors_of_set(g, labels.sets[static_cast<std::size_t>(cb)]) == s;
}

// Lazy enumeration of all minimal a-b separators.
//
// Traverses the separators by breadth-first search. For a connected set A
// containing a with b outside N[A], close(A) = N(C_b) where C_b is the
// component of b in G - N(A); this is the minimal separator nearest to b
// whose a-side contains A. The start is close({a}); the neighbours of S are
// close(C_a(S) + x) for each x in S not adjacent to b. From any S the a-side
// strictly grows towards the a-side of every other separator, so all of them
// are reached. Each separator is returned when popped, and its neighbours are
// generated on the following call.
class MinimalAbSeparators {
 public:
  explicit MinimalAbSeparators(SeparatorInstance inst) : inst_(std::move(inst)) {
    const auto& g = inst_.graph;
    if (inst_.a == inst_.b || inst_.a < 0 || inst_.b < 0 || inst_.a >= g.n() || inst_.b >= g.n()) {
      throw InputError("separator instance: invalid endpoints");
    }
    if (g.adjacent(inst_.a, inst_.b)) throw NoSeparatorError("a and b are adjacent: no separator exists");
  }

  std::optional<VertexSet> next() {
    if (!started_) {
      started_ = true;
      discover(close_to_b({inst_.a}));
    }
    if (last_) {
      expand(*last_);
      last_.reset();
    }
    if (queue_.empty()) return std::nullopt;
    last_ = std::move(queue_.front());
    queue_.pop_front();
    return last_;
  }

  const SeparatorInstance& instance() const { return inst_; }

 private:
  VertexSet close_to_b(const VertexSet& a_side) const {
    const auto& g = inst_.graph;
    auto blocked = membership_mask(g.n(), neighbors_of_set(g, a_side));
    std::vector<char> within(blocked.size());
    for (std::size_t i = 0; i < blocked.size(); ++i) within[i] = !blocked[i];
    return neighbors_of_set(g, component_within(g, within, inst_.b));
  }

  void expand(const VertexSet& s) {
    const auto& g = inst_.graph;
    auto blocked = membership_mask(g.n(), s);
    std::vector<char> within(blocked.size());
    for (std::size_t i = 0; i < blocked.size(); ++i) within[i] = !blocked[i];
    const VertexSet a_side = component_within(g, within, inst_.a);
    std::vector<std::pair<std::string, VertexSet>> fresh;
    for (Vertex x : s) {
      if (g.adjacent(x, inst_.b)) continue;
      VertexSet grown = a_side;
      grown.insert(std::upper_bound(grown.begin(), grown.end(), x), x);
      VertexSet next = close_to_b(grown);
      auto key = canonical_key(next);
      if (!visited_.contains(key)) {
        visited_.insert(key);
        fresh.emplace_back(std::move(key), std::move(next));
      }
    }
    std::sort(fresh.begin(), fresh.end());
    for (auto& f : fresh) queue_.push_back(std::move(f.second));
  }

  void discover(VertexSet s) {
    visited_.insert(canonical_key(s));
    queue_.push_back(std::move(s));
  }

  SeparatorInstance inst_;
  bool started_ = false;
  std::optional<VertexSet> last_;
  std::deque<VertexSet> queue_;
  std::unordered_set<std::string> visited_;
};

// Calls visit(S) for every minimal a-b separator until visit returns false.
template <typename Visitor>
void enumerate_minimal_ab_separators(const SeparatorInstance& inst, Visitor&& visit) {
  MinimalAbSeparators stream(inst);
  while (auto s = stream.next()) {
    if (!visit(*s)) return;
  }
}

}  // namespace mcut

#endif  // MCUT_SEPARATORS_HPP
