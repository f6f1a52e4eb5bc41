#ifndef MCUT_TESTS_FIXTURES_HPP
#define MCUT_TESTS_FIXTURES_HPP

#include <set>
#include <vector>

#include "mcut/mcut.hpp"

namespace mcut::fixtures {

inline Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, normalized(e));
}

inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return Graph(n, e);
}

inline Graph star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

inline Graph P3() { return path(3); }
inline Graph P5() { return path(5); }
inline Graph C4() { return cycle(4); }
inline Graph C6() { return cycle(6); }
inline Graph STAR3() { return star(3); }
inline Graph K4() { return complete(4); }
inline Graph triangle() { return complete(3); }

inline TerminalPairs pairs(std::initializer_list<std::pair<int, int>> ps) {
  std::vector<TerminalPair> out;
  for (auto [a, b] : ps) out.emplace_back(a, b);
  return TerminalPairs(out);
}

inline OrderedTerminals terms(std::vector<Vertex> t) { return OrderedTerminals(std::move(t)); }

inline EdgeSet edges(std::initializer_list<std::pair<int, int>> es) {
  EdgeSet out;
  for (auto [a, b] : es) out.emplace_back(a, b);
  return normalized(out);
}

template <typename Enumerate>
std::vector<VertexSet> collect_vertices(Enumerate&& run) {
  std::vector<VertexSet> out;
  run([&](const VertexSet& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

template <typename Enumerate>
std::vector<EdgeSet> collect_edges(Enumerate&& run) {
  std::vector<EdgeSet> out;
  run([&](const EdgeSet& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

template <typename T>
bool has_duplicates(const std::vector<T>& xs) {
  std::set<T> s(xs.begin(), xs.end());
  return s.size() != xs.size();
}

}  // namespace mcut::fixtures

#endif  // MCUT_TESTS_FIXTURES_HPP
