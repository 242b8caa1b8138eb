#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphfano/classifier.hpp"
#include "graphfano/graph.hpp"

namespace graphfano {

/// All labeled graphs on n nodes (1 <= n <= 8) by ascending edge mask, the
/// mask bits following graph6 pair order.
class LabeledGraphs {
 public:
  LabeledGraphs(int n, bool connected_only);

  /// Next graph, or nullopt when exhausted.
  std::optional<Graph> next();
  /// Edge mask of the graph most recently returned by next().
  std::uint64_t current_mask() const { return mask_ - 1; }
  std::uint64_t mask_limit() const { return limit_; }

 private:
  int n_;
  bool connected_only_;
  std::uint64_t mask_ = 0;
  std::uint64_t limit_;
};

LabeledGraphs all_labeled_graphs(int n, bool connected_only);

/// One graph on which the two routes disagree, or on which some wall's
/// completion value differs from the linear-algebra value.
struct Mismatch {
  std::string graph6;
  std::string detail;
  Classification walls;
  Classification theorem;
  std::vector<WallReport> reports;
};

struct CensusReport {
  std::optional<int> n;  // empty for a corpus census
  std::uint64_t graphs_total = 0;
  std::uint64_t graphs_connected = 0;
  std::uint64_t fano_count = 0;
  std::uint64_t weak_fano_count = 0;
  std::uint64_t neither_count = 0;
  std::uint64_t walls_checked = 0;
  std::vector<Mismatch> mismatches;
  /// graph6 strings of graphs whose wall computation ran out of budget.
  std::vector<std::string> budget_exceeded;
  std::int64_t runtime_ms = 0;
};

struct CensusOptions {
  bool connected_only = false;
  unsigned jobs = 1;
  std::uint64_t budget = kDefaultBudget;
};

/// Classifies every labeled graph on n nodes both ways.
CensusReport cross_validate(int n, const CensusOptions& options = {});
/// Same over an explicit corpus, reported in corpus order.
CensusReport cross_validate(std::span<const Graph> corpus, const CensusOptions& options = {});

/// One graph6 string per line; blank lines and '#' comments are skipped.
std::vector<Graph> read_graph6_corpus(std::istream& in);

}  // namespace graphfano
