// multicut_enum: enumerate minimal multicuts and multiway cuts of a graph.
//
// Exit status: 0 ok, 2 infeasible instance, 3 parse or usage error,
// 4 oracle mismatch, 5 instance too large for the oracle.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mcut/mcut.hpp"

namespace {

using mcut::EdgeSet;
using mcut::VertexSet;
using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr int kOk = 0;
constexpr int kInfeasible = 2;
constexpr int kParseError = 3;
constexpr int kOracleMismatch = 4;
constexpr int kOracleGuard = 5;

struct RunConfig {
  std::string mode;
  std::string graph_path;
  std::string terminal_path;
  std::optional<std::size_t> limit;
  bool stats = false;
  bool oracle_check = false;
  std::string format = "lines";
};

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mcut::InputError("cannot open '" + path + "'");
  return in;
}

long peak_rss_kib() {
  std::ifstream status("/proc/self/status");
  std::string key;
  while (status >> key) {
    if (key == "VmHWM:") {
      long kib = 0;
      status >> kib;
      return kib;
    }
    status.ignore(1 << 12, '\n');
  }
  return -1;
}

// Writes solutions in discovery order and records per-output timings.
class Sink {
 public:
  Sink(const RunConfig& cfg) : cfg_(cfg), start_(Clock::now()), last_(start_) {}

  // Returns false once the limit is reached.
  bool put(const json& element, const std::string& line) {
    if (cfg_.format == "json") {
      std::cout << (count_ == 0 ? "[\n" : ",\n") << element.dump();
    } else {
      std::cout << line << '\n';
    }
    note_delta();
    ++count_;
    return !cfg_.limit || count_ < *cfg_.limit;
  }

  void finish() {
    if (cfg_.format == "json") std::cout << (count_ == 0 ? "[]\n" : "\n]\n");
    std::cout.flush();
    note_delta();
  }

  bool limit_hit() const { return cfg_.limit && count_ >= *cfg_.limit; }

  json stats() const {
    double max_us = 0;
    double sum_us = 0;
    for (double d : deltas_us_) {
      max_us = std::max(max_us, d);
      sum_us += d;
    }
    std::uint64_t max_ops = 0;
    for (auto o : ops_) max_ops = std::max(max_ops, o);
    return {{"outputs", count_},
            {"deltas_us", deltas_us_},
            {"max_delay_us", max_us},
            {"mean_delay_us", deltas_us_.empty() ? 0.0 : sum_us / static_cast<double>(deltas_us_.size())},
            {"total_us", sum_us},
            {"ops_deltas", ops_},
            {"max_delay_ops", max_ops},
            {"peak_rss_kib", peak_rss_kib()}};
  }

 private:
  void note_delta() {
    const auto now = Clock::now();
    deltas_us_.push_back(std::chrono::duration<double, std::micro>(now - last_).count());
    ops_.push_back(mcut::instrument::work() - last_ops_);
    last_ops_ = mcut::instrument::work();
    last_ = now;
  }

  const RunConfig& cfg_;
  Clock::time_point start_;
  Clock::time_point last_;
  std::uint64_t last_ops_ = 0;
  std::size_t count_ = 0;
  std::vector<double> deltas_us_;
  std::vector<std::uint64_t> ops_;
};

json vertices_json(const VertexSet& s) { return {{"vertices", s}}; }

json edges_json(const EdgeSet& f) {
  json arr = json::array();
  for (const auto& e : f) arr.push_back({e.u, e.v});
  return {{"edges", arr}};
}

// Full equality, or containment when the run was cut short by --limit.
bool oracle_agrees(const mcut::oracle::SolutionSet& expected, const mcut::oracle::SolutionSet& got, bool partial) {
  if (!partial) return expected == got;
  for (const auto& s : got) {
    if (!expected.contains(s)) return false;
  }
  return true;
}

int run_steiner(const RunConfig& cfg, Sink& sink) {
  auto in = open_or_throw(cfg.terminal_path);
  auto h = mcut::io::read_hypergraph(in);
  auto transversals = mcut::minimal_transversals_brute(h);
  const bool agrees = mcut::cross_check_transversals(h);
  for (const auto& s : transversals) {
    if (!sink.put(vertices_json(s), mcut::io::format_vertices(s))) break;
  }
  sink.finish();
  if (cfg.stats) std::cerr << json{{"stats", sink.stats()}}.dump() << '\n';
  if (!agrees) {
    std::cerr << "steiner-check: split-graph multicuts differ from the minimal transversals\n";
    return kOracleMismatch;
  }
  return kOk;
}

int run(const RunConfig& cfg) {
  Sink sink(cfg);
  mcut::instrument::reset();
  if (cfg.mode == "steiner-check") return run_steiner(cfg, sink);

  auto graph_in = open_or_throw(cfg.graph_path);
  const mcut::Graph g = mcut::io::read_graph(graph_in);
  auto term_in = open_or_throw(cfg.terminal_path);

  using mcut::oracle::OracleKind;
  mcut::oracle::SolutionSet expected;
  mcut::oracle::SolutionSet got;
  auto put_vertices = [&](const VertexSet& s) {
    if (cfg.oracle_check) got.insert({s, {}});
    return sink.put(vertices_json(s), mcut::io::format_vertices(s));
  };
  auto put_edges = [&](const EdgeSet& f) {
    if (cfg.oracle_check) got.insert({{}, f});
    return sink.put(edges_json(f), mcut::io::format_edges(f));
  };

  mcut::EnumerationStatus status{};
  if (cfg.mode == "node-multicut" || cfg.mode == "edge-multicut") {
    const auto b = mcut::io::read_pairs(term_in, g.n());
    const bool node = cfg.mode == "node-multicut";
    if (cfg.oracle_check) {
      expected = mcut::oracle::brute_force_enumerate(g, b, node ? OracleKind::kNodeMulticut : OracleKind::kEdgeMulticut);
    }
    status = node ? mcut::enumerate_minimal_node_multicuts(g, b, put_vertices)
                  : mcut::enumerate_minimal_edge_multicuts(g, b, put_edges);
  } else {
    const auto t = mcut::io::read_ordered_terminals(term_in, g.n());
    const bool node = cfg.mode == "node-multiway";
    if (cfg.oracle_check) {
      expected = mcut::oracle::brute_force_enumerate(g, t, node ? OracleKind::kNodeMultiway : OracleKind::kEdgeMultiway);
    }
    status = node ? mcut::enumerate_minimal_node_multiway(g, t, put_vertices)
                  : mcut::enumerate_minimal_edge_multiway(g, t, put_edges);
  }
  sink.finish();
  if (cfg.stats) std::cerr << json{{"stats", sink.stats()}}.dump() << '\n';

  if (status == mcut::EnumerationStatus::kInfeasible) {
    std::cerr << "infeasible: no " << cfg.mode << " exists (adjacent terminals)\n";
    return kInfeasible;
  }
  if (cfg.oracle_check && !oracle_agrees(expected, got, sink.limit_hit())) {
    std::cerr << "oracle mismatch: enumerated " << got.size() << " solutions, oracle has " << expected.size() << '\n';
    return kOracleMismatch;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate minimal node/edge multicuts and multiway cuts"};
  RunConfig cfg;
  std::size_t limit = 0;
  app.add_option("--mode", cfg.mode, "What to enumerate")
      ->required()
      ->check(CLI::IsMember({"node-multicut", "edge-multicut", "node-multiway", "edge-multiway", "steiner-check"}));
  app.add_option("--graph", cfg.graph_path, "Graph file: 'n m' then m lines 'u v'");
  app.add_option("--terminals", cfg.terminal_path,
                 "Pairs file (multicut), one ordered terminal line (multiway) or hypergraph (steiner-check)")
      ->required();
  auto* limit_opt = app.add_option("--limit", limit, "Stop after this many solutions")->check(CLI::PositiveNumber);
  app.add_flag("--stats", cfg.stats, "Print delay and memory statistics as JSON on stderr");
  app.add_flag("--oracle-check", cfg.oracle_check, "Compare against exhaustive search (small instances only)");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"lines", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseError;
  }
  if (*limit_opt) cfg.limit = limit;
  if (cfg.mode != "steiner-check" && cfg.graph_path.empty()) {
    std::cerr << "--graph is required for mode " << cfg.mode << '\n';
    return kParseError;
  }

  try {
    return run(cfg);
  } catch (const mcut::oracle::GuardExceeded& e) {
    std::cerr << "oracle guard: " << e.what() << '\n';
    return kOracleGuard;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kParseError;
  }
}
