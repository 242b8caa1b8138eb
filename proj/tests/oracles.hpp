#pragma once

// Brute-force reference computations for the tests. Written against plain
// std::set containers so they share no code with the mask-based library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "graphfano/graph.hpp"

namespace oracle {

using Labels = std::set<int>;

inline bool adjacent(const graphfano::Graph& g, int u, int v) {
  for (auto [a, b] : g.edges()) {
    if ((a == u && b == v) || (a == v && b == u)) return true;
  }
  return false;
}

inline bool connected(const graphfano::Graph& g, const Labels& s) {
  if (s.empty()) return false;
  Labels seen{*s.begin()};
  std::vector<int> stack{*s.begin()};
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : s) {
      if (!seen.count(y) && adjacent(g, x, y)) {
        seen.insert(y);
        stack.push_back(y);
      }
    }
  }
  return seen.size() == s.size();
}

inline Labels from_bits(std::uint64_t bits) {
  Labels out;
  for (int i = 0; i < 64; ++i) {
    if ((bits >> i) & 1U) out.insert(i + 1);
  }
  return out;
}

inline std::uint64_t to_bits(const Labels& s) {
  std::uint64_t bits = 0;
  for (int x : s) bits |= std::uint64_t{1} << (x - 1);
  return bits;
}

/// Every nonempty subset tested for connectivity.
inline std::vector<Labels> building_set(const graphfano::Graph& g) {
  std::vector<Labels> out;
  const int n = g.node_count();
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    const Labels s = from_bits(bits);
    if (connected(g, s)) out.push_back(s);
  }
  return out;
}

inline bool is_subset(const Labels& a, const Labels& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline Labels set_union(const Labels& a, const Labels& b) {
  Labels out = a;
  out.insert(b.begin(), b.end());
  return out;
}

inline bool disjoint(const Labels& a, const Labels& b) {
  return std::none_of(a.begin(), a.end(), [&](int x) { return b.count(x) != 0; });
}

/// The three nested-set conditions, checked literally.
inline bool nested(const graphfano::Graph& g, const std::vector<Labels>& family) {
  Labels all;
  for (int v = 1; v <= g.node_count(); ++v) all.insert(v);
  bool has_top = false;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i] == all) has_top = true;
    for (std::size_t k = i + 1; k < family.size(); ++k) {
      const auto& a = family[i];
      const auto& b = family[k];
      const bool ok1 = is_subset(a, b) || is_subset(b, a) || disjoint(a, b);
      if (!ok1) return false;
      if (disjoint(a, b) && connected(g, set_union(a, b))) return false;
    }
  }
  return has_top;
}

/// Calls `visit` on every k-element subset of `pool` (as index lists).
inline void for_each_combination(std::size_t pool, std::size_t k,
                                 const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t from) {
    if (depth == k) {
      visit(idx);
      return;
    }
    for (std::size_t i = from; i + (k - depth) <= pool; ++i) {
      idx[depth] = i;
      rec(depth + 1, i + 1);
    }
  };
  rec(0, 0);
}

/// All nested sets of the given size (including V(G)), each as a sorted
/// vector of bit masks.
inline std::vector<std::vector<std::uint64_t>> nested_sets(const graphfano::Graph& g,
                                                           std::size_t size) {
  const auto building = building_set(g);
  Labels all;
  for (int v = 1; v <= g.node_count(); ++v) all.insert(v);
  std::vector<Labels> proper;
  for (const auto& s : building) {
    if (s != all) proper.push_back(s);
  }
  std::vector<std::vector<std::uint64_t>> out;
  for_each_combination(proper.size(), size - 1, [&](const std::vector<std::size_t>& idx) {
    std::vector<Labels> family{all};
    for (std::size_t i : idx) family.push_back(proper[i]);
    if (!nested(g, family)) return;
    std::vector<std::uint64_t> masks;
    for (const auto& s : family) masks.push_back(to_bits(s));
    std::sort(masks.begin(), masks.end());
    out.push_back(masks);
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

inline std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

inline std::uint64_t catalan(int n) { return binomial(2 * n, n) / static_cast<std::uint64_t>(n + 1); }

/// Connected induced subgraph is a cycle (all degrees two, at least three
/// nodes), checked from the edge list.
inline bool induces_cycle(const graphfano::Graph& g, const Labels& s) {
  if (s.size() < 3 || !connected(g, s)) return false;
  for (int x : s) {
    int d = 0;
    for (int y : s) d += (x != y && adjacent(g, x, y)) ? 1 : 0;
    if (d != 2) return false;
  }
  return true;
}

/// Induced subgraph is K_4 minus one edge.
inline bool induces_diamond(const graphfano::Graph& g, const Labels& s) {
  if (s.size() != 4) return false;
  int edges = 0;
  int missing = 0;
  for (int x : s)
    for (int y : s)
      if (x < y) (adjacent(g, x, y) ? edges : missing) += 1;
  return edges == 5 && missing == 1;
}

/// Literal reading of the weak Fano graph condition.
inline bool weak_fano_condition(const graphfano::Graph& g) {
  for (const auto& component : graphfano::connected_components(g)) {
    const Labels comp = from_bits(component.bits());
    const auto members = std::vector<int>(comp.begin(), comp.end());
    const std::size_t k = members.size();
    for (std::uint64_t sub = 1; sub + 1 < (std::uint64_t{1} << k); ++sub) {
      Labels s;
      for (std::size_t i = 0; i < k; ++i) {
        if ((sub >> i) & 1U) s.insert(members[i]);
      }
      if ((s.size() >= 4 && induces_cycle(g, s)) || induces_diamond(g, s)) return false;
    }
  }
  return true;
}

}  // namespace oracle
