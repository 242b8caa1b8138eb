#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace graphfano {

/// Largest supported node count: one 64-bit mask per node and a single
/// graph6 size byte.
inline constexpr int kMaxNodes = 62;

using Mask = std::uint64_t;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr Mask bit_of(int label) { return Mask{1} << (label - 1); }
constexpr Mask full_mask(int node_count) {
  return node_count >= 64 ? ~Mask{0} : (Mask{1} << node_count) - 1;
}
int popcount(Mask m);
/// Label (1-based) of the lowest set bit; m must be nonzero.
int lowest_label(Mask m);

/// A subset of the nodes {1, ..., universe} of some ambient graph.
///
/// Labels are 1-based; label i occupies bit i-1. Binary operations require
/// both operands to share the same universe.
class NodeSet {
 public:
  NodeSet() = default;
  NodeSet(int universe, Mask bits);

  static NodeSet of(int universe, std::initializer_list<int> labels);
  static NodeSet of(int universe, std::span<const int> labels);
  static NodeSet full(int universe) { return {universe, full_mask(universe)}; }

  int universe() const { return universe_; }
  Mask bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  int size() const { return popcount(bits_); }
  bool contains(int label) const;
  std::vector<int> labels() const;

  bool subset_of(const NodeSet& other) const;
  bool disjoint_from(const NodeSet& other) const;

  NodeSet operator|(const NodeSet& other) const;
  NodeSet operator&(const NodeSet& other) const;
  NodeSet operator-(const NodeSet& other) const;

  bool operator==(const NodeSet&) const = default;
  /// Canonical order: ascending mask value.
  std::strong_ordering operator<=>(const NodeSet& other) const;

  /// "{1,2,3}"
  std::string to_string() const;

 private:
  void require_same_universe(const NodeSet& other) const;

  int universe_ = 0;
  Mask bits_ = 0;
};

std::ostream& operator<<(std::ostream& os, const NodeSet& s);

/// Finite simple graph on nodes 1..node_count, stored as per-node
/// adjacency masks. Immutable once built.
class Graph {
 public:
  explicit Graph(int node_count);

  /// Throws ParseError on out-of-range endpoints, self-loops or duplicates.
  static Graph from_edges(int node_count, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int node_count, std::initializer_list<std::pair<int, int>> edges);
  /// Edge bit k follows graph6 column order (1,2),(1,3),(2,3),(1,4),...
  static Graph from_edge_mask(int node_count, std::uint64_t edge_bits);

  int node_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const;
  bool adjacent(int u, int v) const;
  int degree(int v) const { return popcount(adjacency_[v - 1]); }
  Mask neighbor_mask(int v) const { return adjacency_[v - 1]; }
  std::span<const Mask> adjacency() const { return adjacency_; }
  NodeSet all_nodes() const { return NodeSet::full(node_count()); }

  /// Sorted (u < v) edge list.
  std::vector<std::pair<int, int>> edges() const;

  bool is_connected() const;
  bool induces_connected(Mask subset) const;
  bool induces_connected(const NodeSet& subset) const;

  bool operator==(const Graph&) const = default;

 private:
  void add_edge(int u, int v);

  std::vector<Mask> adjacency_;
};

/// True iff the subgraph induced on `subset` is nonempty and connected.
bool mask_connected(std::span<const Mask> adjacency, Mask subset);
/// Connected components of the subgraph induced on `subset`, ordered by
/// smallest element.
std::vector<Mask> mask_components(std::span<const Mask> adjacency, Mask subset);

Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
Graph parse_graph6(std::string_view line);
/// Single size byte, zero padding bits.
std::string encode_graph6(const Graph& g);

enum class Family { path, cycle, complete, diamond, star };

/// Named families with canonical labeling. The diamond has apexes 1 and 2
/// and is the complete graph on four nodes minus the edge {3,4}. The star
/// has node 1 as its center.
Graph family_graph(Family kind, int size);
/// "path:3", "cycle:5", "diamond:4", ...
Graph parse_family(std::string_view spec);
std::string_view family_name(Family kind);

/// Nodes of I relabeled 1..|I| in ascending order of their original labels.
Graph induced_subgraph(const Graph& g, const NodeSet& subset);
/// Maps a node set of induced_subgraph(g, selection) back to g's labels.
NodeSet lift_to_parent(const NodeSet& local, const NodeSet& selection);
/// Disjoint union; the second graph's labels are shifted by a.node_count().
Graph disjoint_union(const Graph& a, const Graph& b);

std::vector<NodeSet> connected_components(const Graph& g);

bool is_cycle_graph(const Graph& g);
bool is_diamond(const Graph& g);
/// Mask variants on an induced subgraph; used in the subset scans.
bool induces_cycle(std::span<const Mask> adjacency, Mask subset);
bool induces_diamond(std::span<const Mask> adjacency, Mask subset);

/// Permutation of V(G) starting with `seed` whose every prefix induces a
/// connected subgraph. Extends greedily with the smallest label adjacent to
/// the current prefix. An empty seed starts from node 1.
std::vector<int> connected_extension_order(const Graph& g, std::span<const int> seed);

}  // namespace graphfano
