#include "graphfano/census.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <istream>
#include <thread>

namespace graphfano {

LabeledGraphs::LabeledGraphs(int n, bool connected_only) : n_(n), connected_only_(connected_only) {
  if (n < 1 || n > 8) throw std::invalid_argument("labeled enumeration supports 1 <= n <= 8");
  limit_ = std::uint64_t{1} << (n * (n - 1) / 2);
}

std::optional<Graph> LabeledGraphs::next() {
  while (mask_ < limit_) {
    Graph g = Graph::from_edge_mask(n_, mask_++);
    if (!connected_only_ || g.is_connected()) return g;
  }
  return std::nullopt;
}

LabeledGraphs all_labeled_graphs(int n, bool connected_only) { return {n, connected_only}; }

namespace {

struct Outcome {
  std::size_t index = 0;
  bool connected = false;
  bool budget_exceeded = false;
  bool fano = false;
  bool weak_fano = false;
  std::uint64_t walls = 0;
  std::optional<Mismatch> mismatch;
};

Outcome examine(const Graph& g, std::size_t index, std::uint64_t budget) {
  Outcome out;
  out.index = index;
  out.connected = g.is_connected();

  Classification theorem;
  theorem.method = Method::theorem;
  theorem.fano = is_fano_theorem(g);
  const auto verdict = is_weak_fano_theorem(g);
  theorem.weak_fano = verdict.weak_fano;
  theorem.witness = verdict.witness;

  std::vector<WallReport> reports;
  Classification walls;
  try {
    walls = classify_via_walls(g, budget, &reports);
  } catch (const BudgetExceeded&) {
    out.budget_exceeded = true;
    return out;
  }
  out.walls = reports.size();
  out.fano = walls.fano;
  out.weak_fano = walls.weak_fano;

  std::string detail;
  if (walls.fano != theorem.fano) detail += "fano differs; ";
  if (walls.weak_fano != theorem.weak_fano) detail += "weak_fano differs; ";
  const bool oracle_ok = std::all_of(reports.begin(), reports.end(),
                                     [](const WallReport& r) { return r.agree; });
  if (!oracle_ok) detail += "wall oracle differs; ";
  if (!detail.empty()) {
    detail.resize(detail.size() - 2);
    out.mismatch = Mismatch{encode_graph6(g), detail, walls, theorem, std::move(reports)};
  }
  return out;
}

template <typename Source>
CensusReport run(std::size_t count, Source&& graph_at, const CensusOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const unsigned jobs = std::max(1U, options.jobs);
  std::vector<std::vector<Outcome>> per_worker(jobs);
  auto work = [&](unsigned worker) {
    for (std::size_t i = worker; i < count; i += jobs) {
      auto g = graph_at(i);
      if (!g) continue;
      per_worker[worker].push_back(examine(*g, i, options.budget));
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
  }

  std::vector<Outcome> outcomes;
  for (auto& chunk : per_worker) {
    std::move(chunk.begin(), chunk.end(), std::back_inserter(outcomes));
  }
  std::sort(outcomes.begin(), outcomes.end(),
            [](const Outcome& a, const Outcome& b) { return a.index < b.index; });

  CensusReport report;
  for (auto& o : outcomes) {
    ++report.graphs_total;
    if (o.connected) ++report.graphs_connected;
    if (o.budget_exceeded) continue;
    report.walls_checked += o.walls;
    if (o.fano) ++report.fano_count;
    if (o.weak_fano) {
      ++report.weak_fano_count;
    } else {
      ++report.neither_count;
    }
    if (o.mismatch) report.mismatches.push_back(std::move(*o.mismatch));
  }
  for (const auto& o : outcomes) {
    if (o.budget_exceeded) report.budget_exceeded.push_back(encode_graph6(*graph_at(o.index)));
  }
  report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace

CensusReport cross_validate(int n, const CensusOptions& options) {
  const LabeledGraphs range(n, options.connected_only);
  auto graph_at = [&](std::size_t mask) -> std::optional<Graph> {
    Graph g = Graph::from_edge_mask(n, mask);
    if (options.connected_only && !g.is_connected()) return std::nullopt;
    return g;
  };
  CensusReport report = run(static_cast<std::size_t>(range.mask_limit()), graph_at, options);
  report.n = n;
  return report;
}

CensusReport cross_validate(std::span<const Graph> corpus, const CensusOptions& options) {
  auto graph_at = [&](std::size_t i) -> std::optional<Graph> {
    if (options.connected_only && !corpus[i].is_connected()) return std::nullopt;
    return corpus[i];
  };
  return run(corpus.size(), graph_at, options);
}

std::vector<Graph> read_graph6_corpus(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      out.push_back(parse_graph6(std::string_view(line).substr(first)));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace graphfano
