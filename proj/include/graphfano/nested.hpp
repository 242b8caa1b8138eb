#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphfano/graph.hpp"

namespace graphfano {

/// Default cap on search nodes spent enumerating building sets and nested
/// sets for one connected graph.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 20;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when the nested complex violates a structural fact that holds for
/// every smooth complete fan. Never expected on valid input.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Search-node counter shared by one enumeration. Not thread-safe; use one
/// per job.
class Budget {
 public:
  explicit Budget(std::uint64_t limit = kDefaultBudget) : limit_(limit) {}

  void charge(std::uint64_t nodes = 1) {
    used_ += nodes;
    if (used_ > limit_) {
      throw BudgetExceeded("search budget of " + std::to_string(limit_) + " nodes exceeded");
    }
  }
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

/// All nonempty node sets inducing a connected subgraph, ascending by mask.
struct BuildingSet {
  Graph ambient;
  std::vector<NodeSet> members;
  /// Dense membership table indexed by mask; filled for small graphs only.
  std::vector<bool> dense;

  bool contains(Mask bits) const;
  bool contains(const NodeSet& s) const { return contains(s.bits()); }
  NodeSet top() const { return ambient.all_nodes(); }
};

/// Members in ascending mask order. Always includes V(G) when produced by
/// the enumerators below.
class NestedSet {
 public:
  NestedSet() = default;
  explicit NestedSet(std::vector<NodeSet> members);

  const std::vector<NodeSet>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const NodeSet& s) const;
  NestedSet with(const NodeSet& extra) const;
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool operator==(const NestedSet&) const = default;
  auto operator<=>(const NestedSet&) const = default;

  /// "{{1},{3},{1,2,3}}"
  std::string to_string() const;

 private:
  std::vector<NodeSet> members_;
};

/// Breadth-wise growth from singletons. Requires a connected graph.
BuildingSet graphical_building_set(const Graph& g, Budget* budget = nullptr);

/// Members I, J of a nested set must be nested, or disjoint with a
/// disconnected union.
bool compatible(const BuildingSet& b, Mask lhs, Mask rhs);

/// Checks the three nested-set conditions. Throws std::invalid_argument if a
/// member is not in the building set.
bool is_nested_set(const BuildingSet& b, std::span<const NodeSet> members);

/// All nested sets of size `size` containing V(G), in depth-first ascending
/// mask order.
std::vector<NestedSet> nested_sets_of_size(const BuildingSet& b, std::size_t size,
                                           Budget* budget = nullptr);

/// Nested sets of size |V(G)|; they index the maximal cones.
std::vector<NestedSet> maximal_nested_sets(const BuildingSet& b, Budget* budget = nullptr);
std::vector<NestedSet> maximal_nested_sets(const Graph& g, Budget* budget = nullptr);

/// Nested sets of size |V(G)|-1; they index the walls. Requires |V(G)| >= 2.
std::vector<NestedSet> walls(const BuildingSet& b, Budget* budget = nullptr);
std::vector<NestedSet> walls(const Graph& g, Budget* budget = nullptr);

/// The two building-set elements completing a wall to a maximal nested set,
/// with the connected components of the subgraph induced on their
/// intersection.
struct WallCompletion {
  NodeSet j;
  NodeSet j_prime;
  NodeSet union_set;
  std::vector<NodeSet> components;

  int m() const { return static_cast<int>(components.size()); }
};

/// Throws InternalInconsistency unless exactly two completions exist, their
/// union lies in the wall and every component of their intersection does.
WallCompletion wall_completions(const BuildingSet& b, const NestedSet& wall);

}  // namespace graphfano
