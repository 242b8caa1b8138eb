#include "graphfano/classifier.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

namespace graphfano {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::walls: return "walls";
    case Method::theorem: return "theorem";
    case Method::both: return "both";
  }
  return "unknown";
}

Method parse_method(std::string_view text) {
  for (Method m : {Method::walls, Method::theorem, Method::both}) {
    if (method_name(m) == text) return m;
  }
  throw std::invalid_argument("unknown method '" + std::string(text) + "'");
}

std::string_view witness_kind_name(WitnessKind k) {
  switch (k) {
    case WitnessKind::induced_cycle: return "induced_cycle";
    case WitnessKind::induced_diamond: return "induced_diamond";
    case WitnessKind::bad_wall: return "bad_wall";
  }
  return "unknown";
}

// ------------------------------------------------------------------ walls

namespace {

using RayIndex = std::unordered_map<Mask, std::size_t>;

RayIndex index_rays(const Fan& fan) {
  RayIndex index;
  for (std::size_t i = 0; i < fan.generators.size(); ++i) index.emplace(fan.generators[i].bits(), i);
  return index;
}

Cone cone_of(const RayIndex& index, const NestedSet& nested, Mask top) {
  Cone cone;
  for (const auto& member : nested) {
    if (member.bits() == top) continue;
    auto it = index.find(member.bits());
    if (it == index.end()) throw InternalInconsistency("no ray for " + member.to_string());
    cone.push_back(it->second);
  }
  std::sort(cone.begin(), cone.end());
  return cone;
}

WallReport completion_report(const BuildingSet& building, const NestedSet& wall) {
  const auto completion = wall_completions(building, wall);
  WallReport r;
  r.wall = wall;
  r.j = completion.j;
  r.j_prime = completion.j_prime;
  r.union_set = completion.union_set;
  r.components = completion.components;
  r.m = completion.m();
  r.union_is_top = completion.union_set == building.top();
  r.a = r.union_is_top ? -r.m : -r.m - 1;
  r.intersection_number = 2 + r.a;
  return r;
}

NestedSet lift_nested(const NestedSet& nested, const NodeSet& selection) {
  std::vector<NodeSet> members;
  members.reserve(nested.size());
  for (const auto& s : nested) members.push_back(lift_to_parent(s, selection));
  return NestedSet(std::move(members));
}

WallReport lift_report(WallReport r, const NodeSet& selection) {
  r.wall = lift_nested(r.wall, selection);
  r.j = lift_to_parent(r.j, selection);
  r.j_prime = lift_to_parent(r.j_prime, selection);
  r.union_set = lift_to_parent(r.union_set, selection);
  for (auto& c : r.components) c = lift_to_parent(c, selection);
  return r;
}

}  // namespace

WallAnalysis analyze_connected_walls(const Graph& g, Budget* budget) {
  WallAnalysis out{graphical_building_set(g, budget), {}, {}};
  out.fan = build_fan(out.building, budget);
  if (g.node_count() < 2) return out;

  // Adjacent cones come from the fan's own facet incidence, not from the
  // completion pair, so the oracle shares nothing with the completion route
  // beyond the ray vectors.
  std::map<Cone, std::vector<std::size_t>> incidence;
  for (auto& f : facet_incidence(out.fan)) incidence.emplace(std::move(f.facet), std::move(f.cones));

  const Mask top = full_mask(g.node_count());
  const RayIndex rays = index_rays(out.fan);
  for (const auto& wall : walls(out.building, budget)) {
    WallReport r = completion_report(out.building, wall);
    const Cone cone = cone_of(rays, wall, top);
    auto it = incidence.find(cone);
    if (it == incidence.end() || it->second.size() != 2) {
      throw InternalInconsistency("wall " + wall.to_string() + " is not shared by two cones");
    }
    const auto relation = wall_relation(out.fan, cone, it->second[0], it->second[1]);
    r.a_oracle = static_cast<int>(relation.a_sum);
    r.agree = r.a == r.a_oracle;
    out.reports.push_back(std::move(r));
  }
  return out;
}

WallReport a_value(const Graph& g, const NestedSet& wall) {
  if (!g.is_connected()) throw std::invalid_argument("a_value requires a connected graph");
  const auto building = graphical_building_set(g);
  if (wall.size() + 1 != static_cast<std::size_t>(g.node_count()) ||
      !is_nested_set(building, wall.members())) {
    throw std::invalid_argument(wall.to_string() + " is not a wall");
  }
  const Fan fan = build_fan(building);
  WallReport r = completion_report(building, wall);
  const Mask top = full_mask(g.node_count());
  const RayIndex rays = index_rays(fan);
  const Cone cone = cone_of(rays, wall, top);
  std::vector<std::size_t> adjacent;
  for (const auto& extra : {r.j, r.j_prime}) {
    const Cone full = cone_of(rays, wall.with(extra), top);
    auto it = std::find(fan.max_cones.begin(), fan.max_cones.end(), full);
    if (it == fan.max_cones.end()) throw InternalInconsistency("completion is not a maximal cone");
    adjacent.push_back(static_cast<std::size_t>(it - fan.max_cones.begin()));
  }
  r.a_oracle = static_cast<int>(wall_relation(fan, cone, adjacent[0], adjacent[1]).a_sum);
  r.agree = r.a == r.a_oracle;
  return r;
}

Classification classify_via_walls(const Graph& g, std::uint64_t budget,
                                  std::vector<WallReport>* reports) {
  Classification out;
  out.method = Method::walls;
  const WallReport* worst = nullptr;
  std::vector<WallReport> all;
  for (const auto& component : connected_components(g)) {
    if (component.size() == 1) continue;  // a point is Fano
    Budget component_budget(budget);
    auto analysis = analyze_connected_walls(induced_subgraph(g, component), &component_budget);
    for (auto& r : analysis.reports) all.push_back(lift_report(std::move(r), component));
  }
  for (const auto& r : all) {
    if (worst == nullptr || r.a < worst->a) worst = &r;
  }
  if (worst != nullptr) {
    out.min_a = worst->a;
    out.fano = worst->a >= -1;
    out.weak_fano = worst->a >= -2;
    if (!out.weak_fano) out.witness = Witness{WitnessKind::bad_wall, std::nullopt, worst->wall, *worst};
  }
  if (reports != nullptr) *reports = std::move(all);
  return out;
}

Classification classify_via_walls(const Graph& g, std::uint64_t budget) {
  return classify_via_walls(g, budget, nullptr);
}

std::vector<WallReport> wall_reports(const Graph& g, std::uint64_t budget) {
  std::vector<WallReport> out;
  classify_via_walls(g, budget, &out);
  return out;
}

// --------------------------------------------------------------- theorems

bool is_fano_theorem(const Graph& g) {
  const auto components = connected_components(g);
  return std::all_of(components.begin(), components.end(),
                     [](const NodeSet& c) { return c.size() <= 3; });
}

namespace {

std::optional<Witness> scan_component(const Graph& g, Mask component) {
  const auto adjacency = g.adjacency();
  const int n = g.node_count();
  // Ascending submasks of `component`, excluding the component itself.
  for (Mask s = (Mask{0} - component) & component; s != component; s = (s - component) & component) {
    if (popcount(s) < 4) continue;
    if (induces_cycle(adjacency, s)) return Witness{WitnessKind::induced_cycle, NodeSet(n, s), {}, {}};
    if (induces_diamond(adjacency, s)) {
      return Witness{WitnessKind::induced_diamond, NodeSet(n, s), {}, {}};
    }
  }
  return std::nullopt;
}

bool component_is_chordal(std::span<const Mask> adjacency, Mask component) {
  // Maximum cardinality search; the reverse visit order is a perfect
  // elimination order iff the graph is chordal.
  std::vector<int> order;
  std::vector<int> weight(adjacency.size(), 0);
  Mask visited = 0;
  while (visited != component) {
    int best = -1;
    for (Mask m = component & ~visited; m != 0; m &= m - 1) {
      const int v = std::countr_zero(m);
      if (best < 0 || weight[v] > weight[best]) best = v;
    }
    order.push_back(best);
    visited |= Mask{1} << best;
    for (Mask m = adjacency[best] & component & ~visited; m != 0; m &= m - 1) {
      ++weight[std::countr_zero(m)];
    }
  }
  Mask earlier = 0;
  for (int v : order) {
    const Mask back = adjacency[v] & earlier;
    if (back != 0) {
      int latest = -1;
      for (int u : order) {
        if ((back >> u) & 1U) latest = u;
      }
      const Mask rest = back & ~(Mask{1} << latest);
      if ((rest & ~adjacency[latest]) != 0) return false;
    }
    earlier |= Mask{1} << v;
  }
  return true;
}

std::optional<Mask> component_diamond(std::span<const Mask> adjacency, Mask component) {
  for (Mask mu = component; mu != 0; mu &= mu - 1) {
    const int u = std::countr_zero(mu);
    for (Mask mv = adjacency[u] & component & ~((Mask{2} << u) - 1); mv != 0; mv &= mv - 1) {
      const int v = std::countr_zero(mv);
      const Mask common = adjacency[u] & adjacency[v] & component;
      for (Mask mw = common; mw != 0; mw &= mw - 1) {
        const int w = std::countr_zero(mw);
        const Mask non_adjacent = common & ~adjacency[w] & ~(Mask{1} << w);
        if (non_adjacent != 0) {
          return (Mask{1} << u) | (Mask{1} << v) | (Mask{1} << w) |
                 (non_adjacent & (~non_adjacent + 1));
        }
      }
    }
  }
  return std::nullopt;
}

/// Shortest path from a to b inside `allowed`, as a node mask.
std::optional<Mask> shortest_path(std::span<const Mask> adjacency, Mask allowed, int a, int b) {
  std::vector<int> parent(adjacency.size(), -1);
  Mask seen = Mask{1} << a;
  std::vector<int> frontier{a};
  while (!frontier.empty() && ((seen >> b) & 1U) == 0) {
    std::vector<int> next;
    for (int x : frontier) {
      for (Mask m = adjacency[x] & allowed & ~seen; m != 0; m &= m - 1) {
        const int y = std::countr_zero(m);
        seen |= Mask{1} << y;
        parent[y] = x;
        next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  if (((seen >> b) & 1U) == 0) return std::nullopt;
  Mask path = 0;
  for (int x = b; x != -1; x = parent[x]) path |= Mask{1} << x;
  return path;
}

std::optional<Mask> component_hole(std::span<const Mask> adjacency, Mask component) {
  for (Mask mv = component; mv != 0; mv &= mv - 1) {
    const int v = std::countr_zero(mv);
    const Mask nbrs = adjacency[v] & component;
    for (Mask ma = nbrs; ma != 0; ma &= ma - 1) {
      const int a = std::countr_zero(ma);
      for (Mask mb = nbrs & ~adjacency[a] & ~((Mask{2} << a) - 1); mb != 0; mb &= mb - 1) {
        const int b = std::countr_zero(mb);
        const Mask allowed =
            (component & ~nbrs & ~(Mask{1} << v)) | (Mask{1} << a) | (Mask{1} << b);
        if (auto path = shortest_path(adjacency, allowed, a, b)) return *path | (Mask{1} << v);
      }
    }
  }
  return std::nullopt;
}

bool component_passes_fast(std::span<const Mask> adjacency, Mask component) {
  if (popcount(component) >= 4 && induces_cycle(adjacency, component)) return true;
  if (induces_diamond(adjacency, component)) return true;
  return component_is_chordal(adjacency, component) &&
         !component_diamond(adjacency, component).has_value();
}

std::optional<Witness> fast_component_witness(const Graph& g, Mask component) {
  const auto adjacency = g.adjacency();
  if (component_passes_fast(adjacency, component)) return std::nullopt;
  const int n = g.node_count();
  if (auto d = component_diamond(adjacency, component)) {
    return Witness{WitnessKind::induced_diamond, NodeSet(n, *d), {}, {}};
  }
  if (auto h = component_hole(adjacency, component)) {
    return Witness{WitnessKind::induced_cycle, NodeSet(n, *h), {}, {}};
  }
  throw InternalInconsistency("fast path rejected a component without a witness");
}

WeakFanoVerdict merge(std::vector<Witness> found) {
  WeakFanoVerdict out;
  if (found.empty()) return out;
  out.weak_fano = false;
  out.witness = *std::min_element(found.begin(), found.end(), [](const Witness& x, const Witness& y) {
    return x.subset->bits() < y.subset->bits();
  });
  return out;
}

}  // namespace

WeakFanoVerdict weak_fano_brute_force(const Graph& g) {
  std::vector<Witness> found;
  for (Mask c : mask_components(g.adjacency(), full_mask(g.node_count()))) {
    if (auto w = scan_component(g, c)) found.push_back(*w);
  }
  return merge(std::move(found));
}

WeakFanoVerdict is_weak_fano_theorem(const Graph& g) {
  std::vector<Witness> found;
  for (Mask c : mask_components(g.adjacency(), full_mask(g.node_count()))) {
    auto w = popcount(c) <= kBruteForceComponentLimit ? scan_component(g, c)
                                                      : fast_component_witness(g, c);
    if (w) found.push_back(*w);
  }
  return merge(std::move(found));
}

bool weak_fano_fast_path(const Graph& g) {
  const auto adjacency = g.adjacency();
  for (Mask c : mask_components(adjacency, full_mask(g.node_count()))) {
    if (!component_passes_fast(adjacency, c)) return false;
  }
  return true;
}

std::optional<Witness> find_forbidden_subgraph(const Graph& g) {
  for (Mask c : mask_components(g.adjacency(), full_mask(g.node_count()))) {
    if (auto w = fast_component_witness(g, c)) return w;
  }
  return std::nullopt;
}

bool is_chordal(const Graph& g) {
  const auto adjacency = g.adjacency();
  for (Mask c : mask_components(adjacency, full_mask(g.node_count()))) {
    if (!component_is_chordal(adjacency, c)) return false;
  }
  return true;
}

bool has_induced_diamond(const Graph& g) {
  return component_diamond(g.adjacency(), full_mask(g.node_count())).has_value();
}

// -------------------------------------------------------------- witnesses

namespace {

/// Cycle nodes in walking order from the smallest label towards its smaller
/// neighbor.
std::vector<int> cycle_order(const Graph& g, Mask cycle) {
  std::vector<int> order{lowest_label(cycle)};
  int previous = -1;
  while (static_cast<int>(order.size()) < popcount(cycle)) {
    const int current = order.back();
    Mask next = g.neighbor_mask(current) & cycle;
    if (previous > 0) next &= ~bit_of(previous);
    previous = current;
    order.push_back(lowest_label(next));
  }
  return order;
}

/// Apexes ascending, then the two degree-two nodes ascending.
std::vector<int> diamond_order(const Graph& g, Mask diamond) {
  std::vector<int> apexes;
  std::vector<int> others;
  for (Mask m = diamond; m != 0; m &= m - 1) {
    const int v = lowest_label(m);
    (popcount(g.neighbor_mask(v) & diamond) == 3 ? apexes : others).push_back(v);
  }
  apexes.insert(apexes.end(), others.begin(), others.end());
  return apexes;
}

}  // namespace

NestedSet bad_nested_set(const Graph& g, const Witness& witness) {
  if (!g.is_connected()) throw std::invalid_argument("bad nested set needs a connected graph");
  if (!witness.subset || witness.subset->universe() != g.node_count()) {
    throw std::invalid_argument("witness carries no node set for this graph");
  }
  const int n = g.node_count();
  const Mask subset = witness.subset->bits();
  if (subset == full_mask(n)) throw std::invalid_argument("witness subset is not proper");

  std::vector<int> seed;
  if (witness.kind == WitnessKind::induced_cycle) {
    if (popcount(subset) < 4 || !induces_cycle(g.adjacency(), subset)) {
      throw std::invalid_argument("witness does not induce a cycle of length >= 4");
    }
    seed = cycle_order(g, subset);
  } else if (witness.kind == WitnessKind::induced_diamond) {
    if (!induces_diamond(g.adjacency(), subset)) {
      throw std::invalid_argument("witness does not induce the diamond");
    }
    seed = diamond_order(g, subset);
  } else {
    throw std::invalid_argument("bad_wall witnesses already carry their nested set");
  }

  const auto order = connected_extension_order(g, seed);
  auto prefix = [&](std::size_t length) {
    return NodeSet::of(n, std::span<const int>(order.data(), length));
  };
  auto single = [&](std::size_t position) { return NodeSet::of(n, {order[position - 1]}); };

  const std::size_t l = seed.size();
  std::vector<NodeSet> members;
  if (witness.kind == WitnessKind::induced_cycle) {
    for (std::size_t k = 1; k + 3 <= l; ++k) members.push_back(prefix(k));
    members.push_back(single(l - 1));
  } else {
    members.push_back(single(3));
    members.push_back(single(4));
  }
  for (std::size_t k = l; k <= order.size(); ++k) members.push_back(prefix(k));

  NestedSet nested(std::move(members));
  const auto building = graphical_building_set(g);
  if (nested.size() + 1 != static_cast<std::size_t>(n) ||
      !is_nested_set(building, nested.members())) {
    throw InternalInconsistency("constructed set " + nested.to_string() + " is not a wall");
  }
  return nested;
}

Witness complete_witness(const Graph& g, const Witness& witness) {
  if (witness.kind == WitnessKind::bad_wall) return witness;
  const auto components = connected_components(g);
  auto home = std::find_if(components.begin(), components.end(), [&](const NodeSet& c) {
    return witness.subset->subset_of(c);
  });
  if (home == components.end()) throw std::invalid_argument("witness spans several components");

  Witness out = witness;
  const Graph sub = induced_subgraph(g, *home);
  // Re-express the subset in the component's local labels.
  const auto labels = home->labels();
  Mask local = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (witness.subset->contains(labels[i])) local |= bit_of(static_cast<int>(i) + 1);
  }
  Witness local_witness{witness.kind, NodeSet(sub.node_count(), local), {}, {}};
  const NestedSet nested = bad_nested_set(sub, local_witness);
  WallReport report = lift_report(a_value(sub, nested), *home);
  out.nested_set = report.wall;
  out.report = std::move(report);
  return out;
}

int casagrande_ray_bound(int dim) { return dim % 2 == 0 ? 3 * dim : 3 * dim - 1; }

bool casagrande_bound_holds(const Graph& g) {
  if (!g.is_connected()) throw std::invalid_argument("Casagrande bound check needs a connected graph");
  const auto building = graphical_building_set(g);
  const int dim = g.node_count() - 1;
  const int rays = static_cast<int>(building.members.size()) - 1;
  return rays <= casagrande_ray_bound(dim);
}

// --------------------------------------------------------------- dispatch

Classification classify(const Graph& g, Method mode, std::uint64_t budget) {
  if (mode == Method::walls) return classify_via_walls(g, budget);

  Classification theorem;
  theorem.method = Method::theorem;
  theorem.fano = is_fano_theorem(g);
  auto verdict = is_weak_fano_theorem(g);
  theorem.weak_fano = verdict.weak_fano;
  theorem.witness = verdict.witness;
  if (mode == Method::theorem) return theorem;

  Classification walls = classify_via_walls(g, budget);
  if (walls.fano != theorem.fano || walls.weak_fano != theorem.weak_fano) {
    throw MethodDisagreement("walls and theorem disagree on " + encode_graph6(g));
  }
  Classification out = walls;
  out.method = Method::both;
  if (theorem.witness) out.witness = complete_witness(g, *theorem.witness);
  return out;
}

}  // namespace graphfano
