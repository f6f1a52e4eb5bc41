#ifndef MCUT_IO_HPP
#define MCUT_IO_HPP

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "mcut/graph.hpp"
#include "mcut/steiner.hpp"
#include "mcut/terminals.hpp"

// Text formats.
//   graph:       "n m", then m lines "u v" (0 <= u,v < n, u != v)
//   pairs:       one "u v" pair per line
//   terminals:   one line of distinct ids; order is significant
//   hypergraph:  "|U| |E|", then one line of member ids per hyperedge
namespace mcut::io {

namespace detail {

inline std::vector<long long> ints_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<long long> out;
  long long x = 0;
  while (in >> x) out.push_back(x);
  in.clear();
  std::string rest;
  if (in >> rest) throw InputError("unexpected token '" + rest + "'");
  return out;
}

inline bool blank(const std::string& line) { return line.find_first_not_of(" \t\r") == std::string::npos; }

inline std::vector<std::vector<long long>> int_lines(std::istream& in) {
  std::vector<std::vector<long long>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (blank(line) || line[line.find_first_not_of(" \t")] == '#') continue;
    out.push_back(ints_of(line));
  }
  return out;
}

inline Vertex vertex_id(long long x, long long n) {
  if (x < 0 || x >= n) throw InputError("vertex id " + std::to_string(x) + " out of range");
  return static_cast<Vertex>(x);
}

}  // namespace detail

inline Graph read_graph(std::istream& in, bool require_connected = true) {
  auto lines = detail::int_lines(in);
  if (lines.empty() || lines[0].size() != 2) throw InputError("graph: header must be 'n m'");
  const long long n = lines[0][0];
  const long long m = lines[0][1];
  if (n < 0 || m < 0 || n > (1 << 24)) throw InputError("graph: bad header");
  if (static_cast<long long>(lines.size()) - 1 != m) {
    throw InputError("graph: header announces " + std::to_string(m) + " edges, found " +
                     std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].size() != 2) throw InputError("graph: edge line " + std::to_string(i) + " must be 'u v'");
    Vertex u = detail::vertex_id(lines[i][0], n);
    Vertex v = detail::vertex_id(lines[i][1], n);
    if (u == v) throw InputError("graph: self-loop at " + std::to_string(u));
    edges.emplace_back(u, v);
  }
  Graph g(static_cast<int>(n), std::move(edges));
  if (require_connected && !g.connected()) throw InputError("graph: input graph is disconnected");
  return g;
}

inline TerminalPairs read_pairs(std::istream& in, int n) {
  std::vector<TerminalPair> pairs;
  for (const auto& line : detail::int_lines(in)) {
    if (line.size() != 2) throw InputError("pairs: each line must be 'u v'");
    Vertex u = detail::vertex_id(line[0], n);
    Vertex v = detail::vertex_id(line[1], n);
    if (u == v) throw InputError("pairs: pair with identical endpoints " + std::to_string(u));
    pairs.emplace_back(u, v);
  }
  return TerminalPairs(std::move(pairs));
}

inline OrderedTerminals read_ordered_terminals(std::istream& in, int n) {
  auto lines = detail::int_lines(in);
  if (lines.size() != 1) throw InputError("terminals: expected exactly one line of ids");
  std::vector<Vertex> order;
  for (long long x : lines[0]) order.push_back(detail::vertex_id(x, n));
  return OrderedTerminals(std::move(order));
}

inline Hypergraph read_hypergraph(std::istream& in) {
  auto lines = detail::int_lines(in);
  if (lines.empty() || lines[0].size() != 2) throw InputError("hypergraph: header must be '|U| |E|'");
  const long long u = lines[0][0];
  const long long e = lines[0][1];
  if (u < 0 || e < 0 || u > (1 << 24)) throw InputError("hypergraph: bad header");
  if (static_cast<long long>(lines.size()) - 1 != e) throw InputError("hypergraph: hyperedge count mismatch");
  std::vector<VertexSet> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    VertexSet members;
    for (long long x : lines[i]) members.push_back(detail::vertex_id(x, u));
    members = normalized(std::move(members));
    if (members.size() < 2) {
      throw InputError("hypergraph: hyperedge " + std::to_string(i - 1) + " has fewer than two members");
    }
    edges.push_back(std::move(members));
  }
  return Hypergraph::make(static_cast<int>(u), std::move(edges));
}

inline std::string format_vertices(const VertexSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(s[i]);
  }
  return out;
}

// "u-v u-v ..." in ascending edge order.
inline std::string format_edges(const EdgeSet& f) {
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(f[i].u) + "-" + std::to_string(f[i].v);
  }
  return out;
}

}  // namespace mcut::io

#endif  // MCUT_IO_HPP
