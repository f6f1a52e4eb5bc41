#ifndef MCUT_MULTICUT_HPP
#define MCUT_MULTICUT_HPP

#include <deque>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mcut/graph.hpp"
#include "mcut/line_graph.hpp"
#include "mcut/separators.hpp"
#include "mcut/solution.hpp"
#include "mcut/terminals.hpp"

namespace mcut {

// A multicut instance after the two reductions: adjacent unpaired terminals
// are contracted, and every vertex whose neighbourhood holds a whole pair is
// deleted and remembered in `forced` (it belongs to every multicut).
struct MulticutInstance {
  Graph graph;
  TerminalPairs pairs;
  VertexSet forced;              // original ids
  std::vector<Vertex> to_original;  // reduced vertex -> original vertex

  VertexSet lift(const VertexSet& reduced_cut) const {
    VertexSet out = forced;
    for (Vertex v : reduced_cut) out.push_back(to_original[static_cast<std::size_t>(v)]);
    return normalized(std::move(out));
  }
};

enum class EnumerationStatus { kComplete, kStopped, kInfeasible };

namespace detail {

inline bool neighborhood_holds_pair(const Graph& g, const TerminalPairs& b, Vertex v) {
  for (const auto& p : b.pairs()) {
    if (g.adjacent(v, p.u) && g.adjacent(v, p.v)) return true;
  }
  return false;
}

}  // namespace detail

// Applies both reductions to a fixpoint. Returns nullopt when some terminal
// pair is adjacent, in which case no node multicut exists.
inline std::optional<MulticutInstance> preprocess(const Graph& g, const TerminalPairs& b) {
  b.validate_against(g);
  MulticutInstance inst{g, b, {}, g.all_vertices()};
  for (;;) {
    const auto& cur = inst.graph;
    const auto& pairs = inst.pairs;
    for (const auto& p : pairs.pairs()) {
      if (cur.adjacent(p.u, p.v)) return std::nullopt;
    }

    const auto& terms = pairs.terminals();
    std::optional<Edge> merge;
    for (const auto& e : cur.edges()) {
      if (contains(terms, e.u) && contains(terms, e.v)) {
        merge = e;  // unpaired, since paired terminals were rejected above
        break;
      }
    }
    if (merge) {
      auto c = contract_set(cur, {merge->u, merge->v});
      std::vector<TerminalPair> mapped;
      for (const auto& p : pairs.pairs()) {
        mapped.emplace_back(c.mapping[static_cast<std::size_t>(p.u)], c.mapping[static_cast<std::size_t>(p.v)]);
      }
      std::vector<Vertex> to_original(static_cast<std::size_t>(c.graph.n()), -1);
      for (Vertex old = cur.n() - 1; old >= 0; --old) {
        to_original[static_cast<std::size_t>(c.mapping[static_cast<std::size_t>(old)])] =
            inst.to_original[static_cast<std::size_t>(old)];
      }
      inst = MulticutInstance{std::move(c.graph), TerminalPairs(std::move(mapped)), std::move(inst.forced),
                              std::move(to_original)};
      continue;
    }

    std::optional<Vertex> doomed;
    for (Vertex v = 0; v < cur.n(); ++v) {
      if (!contains(terms, v) && detail::neighborhood_holds_pair(cur, pairs, v)) {
        doomed = v;
        break;
      }
    }
    if (!doomed) return inst;

    VertexSet keep;
    for (Vertex v = 0; v < cur.n(); ++v) {
      if (v != *doomed) keep.push_back(v);
    }
    auto sub = induced_subgraph(cur, keep);
    std::vector<Vertex> index(static_cast<std::size_t>(cur.n()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) index[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
    std::vector<TerminalPair> mapped;
    for (const auto& p : pairs.pairs()) {
      mapped.emplace_back(index[static_cast<std::size_t>(p.u)], index[static_cast<std::size_t>(p.v)]);
    }
    std::vector<Vertex> to_original;
    for (Vertex v : keep) to_original.push_back(inst.to_original[static_cast<std::size_t>(v)]);
    VertexSet forced = inst.forced;
    forced.push_back(inst.to_original[static_cast<std::size_t>(*doomed)]);
    inst = MulticutInstance{std::move(sub.graph), TerminalPairs(std::move(mapped)), normalized(std::move(forced)),
                            std::move(to_original)};
  }
}

// The v - v_t separator instance whose minimal separators are exactly the
// minimal node multicuts of (G[c + v], B'), B' = {{v,t} : {s,t} in B, s in
// N(v) n T, t in c}, with T(B') \ {v} identified into v_t.
struct AbSubinstance {
  SeparatorInstance instance;
  std::vector<Vertex> to_host;  // sub-instance vertex -> host vertex (-1 for a merged v_t)
};

class NoTerminalPairError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline AbSubinstance build_absep_subinstance(const Graph& g, const TerminalPairs& b, const VertexSet& m,
                                             const VertexSet& c, Vertex v) {
  if (!contains(m, v)) throw InputError("build_absep_subinstance: v is not in the cut");
  const auto& terms = b.terminals();
  VertexSet t_v = set_intersection(g.neighbors(v), terms);
  VertexSet far;  // T(B') \ {v}
  for (const auto& p : b.pairs()) {
    if (contains(t_v, p.u) && contains(c, p.v)) far.push_back(p.v);
    if (contains(t_v, p.v) && contains(c, p.u)) far.push_back(p.u);
  }
  far = normalized(std::move(far));
  if (far.empty()) throw NoTerminalPairError("build_absep_subinstance: no terminal pair inside G[N[v] + c]");

  VertexSet hosted = c;
  hosted.insert(std::upper_bound(hosted.begin(), hosted.end(), v), v);
  auto h = induced_subgraph(g, hosted);
  VertexSet far_local;
  Vertex v_local = -1;
  for (std::size_t i = 0; i < hosted.size(); ++i) {
    if (hosted[i] == v) v_local = static_cast<Vertex>(i);
    if (contains(far, hosted[i])) far_local.push_back(static_cast<Vertex>(i));
  }
  auto merged = contract_set(h.graph, far_local);
  AbSubinstance out;
  out.to_host.assign(static_cast<std::size_t>(merged.graph.n()), -1);
  for (std::size_t i = 0; i < hosted.size(); ++i) {
    Vertex to = merged.mapping[i];
    if (to != merged.merged || far_local.size() == 1) out.to_host[static_cast<std::size_t>(to)] = hosted[i];
  }
  out.instance = {std::move(merged.graph), merged.mapping[static_cast<std::size_t>(v_local)], merged.merged};
  return out;
}

// Generates the solution-graph neighbourhood of a minimal node multicut m of
// a reduced instance. For each terminal component c of G - m and each
// v in m n N(c), with T_v = N(v) n T and
//   M'' = (m \ {v}) + (N(T_v + v) \ c),
// yields comp(M'') when G[N[v] + c] holds no terminal pair, and otherwise
// comp(M'' + S) for every minimal v - v_t separator S of the
// build_absep_subinstance instance. visit(candidate) returns false to stop
// early; the function then returns false too.
template <typename Visitor>
bool neighborhood_multicut(const Graph& g, const TerminalPairs& b, const VertexSet& m, Visitor&& visit) {
  const auto& terms = b.terminals();
  auto family = component_family(g, b, m);
  for (const auto& member : family) {
    const VertexSet& c = member.component;
    VertexSet frontier = set_intersection(neighbors_of_set(g, c), m);
    for (Vertex v : frontier) {
      VertexSet t_v = set_intersection(g.neighbors(v), terms);
      VertexSet closed = t_v;
      closed.insert(std::upper_bound(closed.begin(), closed.end(), v), v);
      VertexSet base = set_union(set_difference(m, {v}), set_difference(neighbors_of_set(g, closed), c));

      VertexSet region = set_union(c, set_union(g.neighbors(v), {v}));
      bool pair_inside = false;
      for (const auto& p : b.pairs()) {
        if (contains(region, p.u) && contains(region, p.v)) {
          pair_inside = true;
          break;
        }
      }

      if (!pair_inside) {
        if (is_node_multicut(g, b, base) && !visit(comp_minimalize_multicut(g, b, base))) return false;
        continue;
      }

      auto sub = build_absep_subinstance(g, b, m, c, v);
      MinimalAbSeparators separators(sub.instance);
      while (auto s = separators.next()) {
        VertexSet lifted;
        for (Vertex x : *s) lifted.push_back(sub.to_host[static_cast<std::size_t>(x)]);
        lifted = normalized(std::move(lifted));
        if (intersects(lifted, terms)) continue;  // terminals never belong to a node multicut
        VertexSet candidate = set_union(base, lifted);
        if (is_node_multicut(g, b, candidate) && !visit(comp_minimalize_multicut(g, b, candidate))) return false;
      }
    }
  }
  return true;
}

// Enumerates every minimal node multicut of (g, b) in incremental polynomial
// time by breadth-first traversal of the solution graph, starting from
// comp(V \ T(B)) on the reduced instance. Each solution is passed to
// visit(const VertexSet&) the first time it is seen, in original vertex ids;
// visit returns false to stop.
template <typename Visitor>
EnumerationStatus enumerate_minimal_node_multicuts(const Graph& g, const TerminalPairs& b, Visitor&& visit) {
  auto reduced = preprocess(g, b);
  if (!reduced) return EnumerationStatus::kInfeasible;
  const auto& rg = reduced->graph;
  const auto& rb = reduced->pairs;

  std::unordered_set<std::string> seen;
  std::deque<VertexSet> queue;
  auto discover = [&](VertexSet cut) {
    VertexSet original = reduced->lift(cut);
    auto key = canonical_key(original);
    if (seen.contains(key)) return true;
    seen.insert(std::move(key));
    queue.push_back(std::move(cut));
    return static_cast<bool>(visit(static_cast<const VertexSet&>(original)));
  };

  VertexSet start = set_difference(rg.all_vertices(), rb.terminals());
  if (!discover(comp_minimalize_multicut(rg, rb, start))) return EnumerationStatus::kStopped;
  while (!queue.empty()) {
    VertexSet m = std::move(queue.front());
    queue.pop_front();
    if (!neighborhood_multicut(rg, rb, m, discover)) return EnumerationStatus::kStopped;
  }
  return EnumerationStatus::kComplete;
}

// Minimal edge multicuts via the line-graph expansion: F is an edge multicut
// of g iff the matching edge-vertices form a node multicut of the expansion.
template <typename Visitor>
EnumerationStatus enumerate_minimal_edge_multicuts(const Graph& g, const TerminalPairs& b, Visitor&& visit) {
  auto expansion = line_graph_expand(g, b);
  return enumerate_minimal_node_multicuts(expansion.graph, expansion.terminals, [&](const VertexSet& cut) {
    return static_cast<bool>(visit(static_cast<const EdgeSet&>(expansion.to_edges(g, cut))));
  });
}

}  // namespace mcut

#endif  // MCUT_MULTICUT_HPP
