#include "graphfano/fan.hpp"

#include <unordered_map>

namespace graphfano {

namespace {

Vector<std::int64_t> ray_of(Mask subset, int node_count) {
  const int dim = node_count - 1;
  Vector<std::int64_t> ray = Vector<std::int64_t>::Zero(dim);
  for (Mask m = subset; m != 0; m &= m - 1) {
    const int label = lowest_label(m);
    if (label <= dim) {
      ray(label - 1) += 1;
    } else {
      ray.array() -= 1;
    }
  }
  return ray;
}

}  // namespace

Fan build_fan(const BuildingSet& building, Budget* budget) {
  const int n = building.ambient.node_count();
  if (n == 1) return point_fan<std::int64_t>();
  const Mask top = full_mask(n);

  Fan fan;
  fan.dim = n - 1;
  std::unordered_map<Mask, std::size_t> index;
  for (const auto& member : building.members) {
    if (member.bits() == top) continue;
    index.emplace(member.bits(), fan.rays.size());
    fan.rays.push_back(ray_of(member.bits(), n));
    fan.generators.push_back(member);
  }
  for (const auto& nested : maximal_nested_sets(building, budget)) {
    Cone cone;
    for (const auto& member : nested) {
      if (member.bits() != top) cone.push_back(index.at(member.bits()));
    }
    std::sort(cone.begin(), cone.end());
    fan.max_cones.push_back(std::move(cone));
  }
  return fan;
}

Fan build_fan(const Graph& g, Budget* budget) {
  Fan out = point_fan<std::int64_t>();
  for (const auto& component : connected_components(g)) {
    const Graph sub = induced_subgraph(g, component);
    Fan factor = build_fan(graphical_building_set(sub, budget), budget);
    for (auto& generator : factor.generators) generator = lift_to_parent(generator, component);
    out = product_fan(out, factor);
  }
  return out;
}

}  // namespace graphfano
