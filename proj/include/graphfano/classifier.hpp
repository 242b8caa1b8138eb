#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "graphfano/fan.hpp"
#include "graphfano/graph.hpp"
#include "graphfano/nested.hpp"

namespace graphfano {

/// Raised by classify(..., Method::both) when the two routes disagree.
class MethodDisagreement : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Anticanonical data of one wall.
///
/// `a` comes from the completion pair: with m components in G|_{J cap J'},
/// a = -m when J cup J' = V(G) and a = -m - 1 otherwise. `a_oracle` is the
/// coefficient sum of the integer wall relation solved on the fan itself.
struct WallReport {
  NestedSet wall;
  NodeSet j;
  NodeSet j_prime;
  NodeSet union_set;
  std::vector<NodeSet> components;
  int m = 0;
  int a = 0;
  int intersection_number = 0;
  int a_oracle = 0;
  bool agree = false;
  /// Whether J cup J' is the whole component containing the wall.
  bool union_is_top = false;
};

enum class Method { walls, theorem, both };
enum class WitnessKind { induced_cycle, induced_diamond, bad_wall };

std::string_view method_name(Method m);
Method parse_method(std::string_view text);
std::string_view witness_kind_name(WitnessKind k);

/// Certificate that a graph is not weak Fano. Induced kinds carry the
/// forbidden node set; the nested set and its report are attached when the
/// bad wall has been constructed.
struct Witness {
  WitnessKind kind = WitnessKind::bad_wall;
  std::optional<NodeSet> subset;
  std::optional<NestedSet> nested_set;
  std::optional<WallReport> report;
};

struct Classification {
  bool fano = true;
  bool weak_fano = true;
  /// Minimum a over all walls; empty when the fan has dimension 0 or the
  /// walls were not computed.
  std::optional<int> min_a;
  Method method = Method::theorem;
  std::optional<Witness> witness;
};

/// Wall reports of a connected graph with its fan and building set.
struct WallAnalysis {
  BuildingSet building;
  Fan fan;
  std::vector<WallReport> reports;
};

/// All walls of a connected graph with both a-values filled in.
WallAnalysis analyze_connected_walls(const Graph& g, Budget* budget = nullptr);

/// Report for a single wall of a connected graph.
WallReport a_value(const Graph& g, const NestedSet& wall);

/// Reports for every wall of every component, in component order and
/// original labels.
std::vector<WallReport> wall_reports(const Graph& g, std::uint64_t budget = kDefaultBudget);

/// Fano iff every a >= -1, weak Fano iff every a >= -2, conjunction over
/// components. Each component gets its own budget.
Classification classify_via_walls(const Graph& g, std::uint64_t budget = kDefaultBudget);
/// Same, also returning the reports it was computed from.
Classification classify_via_walls(const Graph& g, std::uint64_t budget,
                                  std::vector<WallReport>* reports);

/// Every connected component has at most three nodes.
bool is_fano_theorem(const Graph& g);

struct WeakFanoVerdict {
  bool weak_fano = true;
  std::optional<Witness> witness;
};

/// Components up to this size are scanned subset by subset; larger ones use
/// the chordal/diamond-free fast path.
inline constexpr int kBruteForceComponentLimit = 20;

/// No component has a proper induced subgraph that is a cycle of length at
/// least four or the diamond. Witness: smallest offending subset mask.
WeakFanoVerdict is_weak_fano_theorem(const Graph& g);
/// Reference scan over every proper subset of every component.
WeakFanoVerdict weak_fano_brute_force(const Graph& g);
/// Polynomial shortcut: a component passes iff it is itself a cycle of
/// length >= 4, the diamond, or chordal and diamond-free.
bool weak_fano_fast_path(const Graph& g);
/// Polynomial witness search used with the fast path. Returns some proper
/// induced long cycle or diamond, not necessarily the canonical one.
std::optional<Witness> find_forbidden_subgraph(const Graph& g);

bool is_chordal(const Graph& g);
bool has_induced_diamond(const Graph& g);

/// The wall with a = -3 built from an induced long cycle or diamond.
/// Requires a connected graph. Throws std::invalid_argument for a witness
/// that is not a proper induced cycle of length >= 4 or diamond.
NestedSet bad_nested_set(const Graph& g, const Witness& witness);
/// bad_nested_set plus its wall report, attached to a copy of the witness.
Witness complete_witness(const Graph& g, const Witness& witness);

/// Upper bound on the ray count of a smooth Fano fan of dimension n: 3n for
/// even n, 3n - 1 for odd n.
int casagrande_ray_bound(int dim);
/// Ray count of the fan of a connected graph respects casagrande_ray_bound.
bool casagrande_bound_holds(const Graph& g);

/// Dispatches on the method. Method::both runs both routes and throws
/// MethodDisagreement if they differ.
Classification classify(const Graph& g, Method mode, std::uint64_t budget = kDefaultBudget);

}  // namespace graphfano
