#include "graphfano/nested.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace graphfano {

namespace {

constexpr int kDenseLookupNodes = 16;

}  // namespace

bool BuildingSet::contains(Mask bits) const {
  if (!dense.empty()) return bits < dense.size() && dense[bits];
  auto it = std::lower_bound(members.begin(), members.end(), bits,
                             [](const NodeSet& s, Mask m) { return s.bits() < m; });
  return it != members.end() && it->bits() == bits;
}

NestedSet::NestedSet(std::vector<NodeSet> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool NestedSet::contains(const NodeSet& s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

NestedSet NestedSet::with(const NodeSet& extra) const {
  auto copy = members_;
  copy.push_back(extra);
  return NestedSet(std::move(copy));
}

std::string NestedSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i != 0) out += ',';
    out += members_[i].to_string();
  }
  out += '}';
  return out;
}

BuildingSet graphical_building_set(const Graph& g, Budget* budget) {
  if (!g.is_connected()) {
    throw std::invalid_argument("graphical building set requires a connected graph");
  }
  const auto adjacency = g.adjacency();
  std::unordered_set<Mask> seen;
  std::vector<Mask> layer;
  for (int v = 1; v <= g.node_count(); ++v) {
    layer.push_back(bit_of(v));
    seen.insert(bit_of(v));
  }
  std::vector<Mask> all = layer;
  while (!layer.empty()) {
    std::vector<Mask> next;
    for (Mask s : layer) {
      Mask boundary = 0;
      for (Mask m = s; m != 0; m &= m - 1) boundary |= adjacency[std::countr_zero(m)];
      boundary &= ~s;
      for (Mask m = boundary; m != 0; m &= m - 1) {
        const Mask grown = s | (m & (~m + 1));
        if (seen.insert(grown).second) {
          if (budget != nullptr) budget->charge();
          next.push_back(grown);
        }
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::sort(all.begin(), all.end());
  BuildingSet out{g, {}, {}};
  out.members.reserve(all.size());
  for (Mask m : all) out.members.emplace_back(g.node_count(), m);
  if (g.node_count() <= kDenseLookupNodes) {
    out.dense.assign(std::size_t{1} << g.node_count(), false);
    for (Mask m : all) out.dense[m] = true;
  }
  return out;
}

bool compatible(const BuildingSet& b, Mask lhs, Mask rhs) {
  const Mask meet = lhs & rhs;
  if (meet == lhs || meet == rhs) return true;
  if (meet != 0) return false;
  return !b.contains(lhs | rhs);
}

bool is_nested_set(const BuildingSet& b, std::span<const NodeSet> members) {
  for (const auto& s : members) {
    if (s.universe() != b.ambient.node_count() || !b.contains(s)) {
      throw std::invalid_argument("nested set member " + s.to_string() +
                                  " is not in the building set");
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t k = i + 1; k < members.size(); ++k) {
      if (!compatible(b, members[i].bits(), members[k].bits())) return false;
    }
  }
  const Mask top = full_mask(b.ambient.node_count());
  return std::any_of(members.begin(), members.end(),
                     [top](const NodeSet& s) { return s.bits() == top; });
}

namespace {

struct NestedSearch {
  const BuildingSet& building;
  std::vector<Mask> candidates;  // B(G) without V(G), ascending
  std::size_t target;            // members besides V(G)
  Budget* budget;
  std::vector<Mask> chosen;
  std::vector<NestedSet> found;

  void extend(std::size_t from) {
    if (budget != nullptr) budget->charge();
    if (chosen.size() == target) {
      record();
      return;
    }
    const std::size_t missing = target - chosen.size();
    for (std::size_t i = from; i + missing <= candidates.size(); ++i) {
      const Mask c = candidates[i];
      const bool ok = std::all_of(chosen.begin(), chosen.end(),
                                  [&](Mask x) { return compatible(building, x, c); });
      if (!ok) continue;
      chosen.push_back(c);
      extend(i + 1);
      chosen.pop_back();
    }
  }

  void record() {
    const int n = building.ambient.node_count();
    std::vector<NodeSet> members;
    members.reserve(chosen.size() + 1);
    for (Mask m : chosen) members.emplace_back(n, m);
    members.push_back(NodeSet::full(n));
    found.emplace_back(std::move(members));
  }
};

}  // namespace

std::vector<NestedSet> nested_sets_of_size(const BuildingSet& b, std::size_t size,
                                           Budget* budget) {
  if (size == 0) return {};
  const Mask top = full_mask(b.ambient.node_count());
  NestedSearch search{b, {}, size - 1, budget, {}, {}};
  for (const auto& s : b.members) {
    if (s.bits() != top) search.candidates.push_back(s.bits());
  }
  search.extend(0);
  return std::move(search.found);
}

std::vector<NestedSet> maximal_nested_sets(const BuildingSet& b, Budget* budget) {
  return nested_sets_of_size(b, static_cast<std::size_t>(b.ambient.node_count()), budget);
}

std::vector<NestedSet> maximal_nested_sets(const Graph& g, Budget* budget) {
  return maximal_nested_sets(graphical_building_set(g, budget), budget);
}

std::vector<NestedSet> walls(const BuildingSet& b, Budget* budget) {
  if (b.ambient.node_count() < 2) throw std::invalid_argument("walls need at least two nodes");
  return nested_sets_of_size(b, static_cast<std::size_t>(b.ambient.node_count() - 1), budget);
}

std::vector<NestedSet> walls(const Graph& g, Budget* budget) {
  return walls(graphical_building_set(g, budget), budget);
}

WallCompletion wall_completions(const BuildingSet& b, const NestedSet& wall) {
  const int n = b.ambient.node_count();
  std::vector<Mask> members;
  members.reserve(wall.size());
  for (const auto& x : wall) members.push_back(x.bits());
  std::vector<Mask> completions;
  for (const auto& candidate : b.members) {
    const Mask c = candidate.bits();
    if (std::find(members.begin(), members.end(), c) != members.end()) continue;
    const bool ok = std::all_of(members.begin(), members.end(),
                                [&](Mask x) { return compatible(b, x, c); });
    if (ok) completions.push_back(c);
  }
  if (completions.size() != 2) {
    throw InternalInconsistency("wall " + wall.to_string() + " has " +
                                std::to_string(completions.size()) + " completions, expected 2");
  }
  WallCompletion out{NodeSet(n, completions[0]), NodeSet(n, completions[1]),
                     NodeSet(n, completions[0] | completions[1]), {}};
  if (!wall.contains(out.union_set)) {
    throw InternalInconsistency("union of completions " + out.union_set.to_string() +
                                " is not in wall " + wall.to_string());
  }
  for (Mask c : mask_components(b.ambient.adjacency(), completions[0] & completions[1])) {
    NodeSet component(n, c);
    if (!wall.contains(component)) {
      throw InternalInconsistency("component " + component.to_string() + " is not in wall " +
                                  wall.to_string());
    }
    out.components.push_back(component);
  }
  return out;
}

}  // namespace graphfano
