#include "graphfano/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace graphfano {

int popcount(Mask m) { return std::popcount(m); }

int lowest_label(Mask m) { return std::countr_zero(m) + 1; }

// ---------------------------------------------------------------- NodeSet

NodeSet::NodeSet(int universe, Mask bits) : universe_(universe), bits_(bits) {
  if (universe < 0 || universe > kMaxNodes) {
    throw std::invalid_argument("node set universe out of range");
  }
  if ((bits & ~full_mask(universe)) != 0) {
    throw std::invalid_argument("node set has labels outside its universe");
  }
}

NodeSet NodeSet::of(int universe, std::initializer_list<int> labels) {
  return of(universe, std::span<const int>(labels.begin(), labels.size()));
}

NodeSet NodeSet::of(int universe, std::span<const int> labels) {
  Mask bits = 0;
  for (int label : labels) {
    if (label < 1 || label > universe) {
      throw std::invalid_argument("label " + std::to_string(label) + " outside 1.." +
                                  std::to_string(universe));
    }
    bits |= bit_of(label);
  }
  return {universe, bits};
}

bool NodeSet::contains(int label) const {
  return label >= 1 && label <= universe_ && (bits_ & bit_of(label)) != 0;
}

std::vector<int> NodeSet::labels() const {
  std::vector<int> out;
  out.reserve(size());
  for (Mask m = bits_; m != 0; m &= m - 1) out.push_back(lowest_label(m));
  return out;
}

void NodeSet::require_same_universe(const NodeSet& other) const {
  if (universe_ != other.universe_) {
    throw std::invalid_argument("node sets over different universes");
  }
}

bool NodeSet::subset_of(const NodeSet& other) const {
  require_same_universe(other);
  return (bits_ & ~other.bits_) == 0;
}

bool NodeSet::disjoint_from(const NodeSet& other) const {
  require_same_universe(other);
  return (bits_ & other.bits_) == 0;
}

NodeSet NodeSet::operator|(const NodeSet& other) const {
  require_same_universe(other);
  return {universe_, bits_ | other.bits_};
}

NodeSet NodeSet::operator&(const NodeSet& other) const {
  require_same_universe(other);
  return {universe_, bits_ & other.bits_};
}

NodeSet NodeSet::operator-(const NodeSet& other) const {
  require_same_universe(other);
  return {universe_, bits_ & ~other.bits_};
}

std::strong_ordering NodeSet::operator<=>(const NodeSet& other) const {
  if (auto c = bits_ <=> other.bits_; c != 0) return c;
  return universe_ <=> other.universe_;
}

std::string NodeSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int label : labels()) {
    if (!first) out += ',';
    out += std::to_string(label);
    first = false;
  }
  out += '}';
  return out;
}

std::ostream& operator<<(std::ostream& os, const NodeSet& s) { return os << s.to_string(); }

// ------------------------------------------------------------------ Graph

Graph::Graph(int node_count) {
  if (node_count < 1 || node_count > kMaxNodes) {
    throw std::invalid_argument("node count must be in 1.." + std::to_string(kMaxNodes));
  }
  adjacency_.assign(static_cast<std::size_t>(node_count), 0);
}

void Graph::add_edge(int u, int v) {
  const int n = node_count();
  if (u < 1 || u > n || v < 1 || v > n) {
    throw ParseError("edge endpoint out of range: " + std::to_string(u) + " " +
                     std::to_string(v));
  }
  if (u == v) throw ParseError("self-loop on node " + std::to_string(u));
  if (adjacent(u, v)) {
    throw ParseError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
  }
  adjacency_[u - 1] |= bit_of(v);
  adjacency_[v - 1] |= bit_of(u);
}

Graph Graph::from_edges(int node_count, std::span<const std::pair<int, int>> edges) {
  Graph g(node_count);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::from_edges(int node_count, std::initializer_list<std::pair<int, int>> edges) {
  return from_edges(node_count, std::span(edges.begin(), edges.size()));
}

Graph Graph::from_edge_mask(int node_count, std::uint64_t edge_bits) {
  if (node_count * (node_count - 1) / 2 > 64) {
    throw std::invalid_argument("edge mask holds at most 64 node pairs");
  }
  Graph g(node_count);
  int k = 0;
  for (int j = 2; j <= node_count; ++j) {
    for (int i = 1; i < j; ++i, ++k) {
      if (((edge_bits >> k) & 1U) != 0) g.add_edge(i, j);
    }
  }
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (Mask m : adjacency_) twice += popcount(m);
  return twice / 2;
}

bool Graph::adjacent(int u, int v) const {
  return (adjacency_[u - 1] & bit_of(v)) != 0;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= node_count(); ++u) {
    for (Mask m = adjacency_[u - 1] & ~full_mask(u); m != 0; m &= m - 1) {
      out.emplace_back(u, lowest_label(m));
    }
  }
  return out;
}

bool Graph::is_connected() const { return mask_connected(adjacency_, full_mask(node_count())); }

bool Graph::induces_connected(Mask subset) const { return mask_connected(adjacency_, subset); }

bool Graph::induces_connected(const NodeSet& subset) const {
  if (subset.universe() != node_count()) {
    throw std::invalid_argument("node set universe does not match graph");
  }
  return mask_connected(adjacency_, subset.bits());
}

// ------------------------------------------------------- mask primitives

namespace {

Mask reach(std::span<const Mask> adjacency, Mask subset, Mask start) {
  Mask seen = start;
  Mask frontier = start;
  while (frontier != 0) {
    Mask next = 0;
    for (Mask m = frontier; m != 0; m &= m - 1) {
      next |= adjacency[std::countr_zero(m)];
    }
    next &= subset & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

}  // namespace

bool mask_connected(std::span<const Mask> adjacency, Mask subset) {
  if (subset == 0) return false;
  return reach(adjacency, subset, subset & (~subset + 1)) == subset;
}

std::vector<Mask> mask_components(std::span<const Mask> adjacency, Mask subset) {
  std::vector<Mask> out;
  while (subset != 0) {
    const Mask component = reach(adjacency, subset, subset & (~subset + 1));
    out.push_back(component);
    subset &= ~component;
  }
  return out;
}

// ---------------------------------------------------------------- parsing

Graph parse_edge_list(std::istream& in) {
  std::string line;
  auto next_line = [&](const char* what) {
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) return;
    }
    throw ParseError(std::string("unexpected end of input reading ") + what);
  };
  auto read_pair = [&](const char* what) {
    std::istringstream fields(line);
    long long a = 0;
    long long b = 0;
    std::string rest;
    if (!(fields >> a >> b) || (fields >> rest)) {
      throw ParseError(std::string("malformed ") + what + " line: '" + line + "'");
    }
    return std::pair{a, b};
  };

  next_line("header");
  auto [n, m] = read_pair("header");
  if (n < 1 || n > kMaxNodes) throw ParseError("node count out of range: " + std::to_string(n));
  if (m < 0) throw ParseError("negative edge count");

  std::vector<std::pair<int, int>> edges;
  for (long long k = 0; k < m; ++k) {
    next_line("edge");
    auto [u, v] = read_pair("edge");
    if (u < 1 || u > n || v < 1 || v > n) {
      throw ParseError("edge endpoint out of range: '" + line + "'");
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      throw ParseError("trailing content after " + std::to_string(m) + " edges");
    }
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  if (line.empty()) throw ParseError("empty graph6 string");
  for (char c : line) {
    const auto byte = static_cast<unsigned char>(c);
    if (byte < 63 || byte > 126) {
      throw ParseError("graph6 byte outside [63,126]: " + std::to_string(byte));
    }
  }
  const int n = static_cast<unsigned char>(line[0]) - 63;
  if (n > kMaxNodes) throw ParseError("graph6 with more than 62 nodes is unsupported");
  if (n < 1) throw ParseError("graph6 graph with zero nodes");

  const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t byte_count = (bit_count + 5) / 6;
  if (line.size() != 1 + byte_count) {
    throw ParseError("graph6 length " + std::to_string(line.size()) + ", expected " +
                     std::to_string(1 + byte_count));
  }
  auto bit = [&](std::size_t k) {
    const int value = static_cast<unsigned char>(line[1 + k / 6]) - 63;
    return ((value >> (5 - k % 6)) & 1) != 0;
  };
  for (std::size_t k = bit_count; k < byte_count * 6; ++k) {
    if (bit(k)) throw ParseError("graph6 padding bits are not zero");
  }
  std::vector<std::pair<int, int>> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (bit(k)) edges.emplace_back(i + 1, j + 1);
    }
  }
  return Graph::from_edges(n, edges);
}

std::string encode_graph6(const Graph& g) {
  const int n = g.node_count();
  const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::string out(1 + (bit_count + 5) / 6, '\0');
  out[0] = static_cast<char>(n + 63);
  std::vector<int> values(out.size() - 1, 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (g.adjacent(i + 1, j + 1)) values[k / 6] |= 1 << (5 - k % 6);
    }
  }
  for (std::size_t b = 0; b < values.size(); ++b) out[1 + b] = static_cast<char>(values[b] + 63);
  return out;
}

// --------------------------------------------------------------- families

std::string_view family_name(Family kind) {
  switch (kind) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::diamond: return "diamond";
    case Family::star: return "star";
  }
  return "unknown";
}

Graph family_graph(Family kind, int size) {
  if (size < 1 || size > kMaxNodes) {
    throw std::invalid_argument("family size out of range: " + std::to_string(size));
  }
  std::vector<std::pair<int, int>> edges;
  switch (kind) {
    case Family::path:
      for (int i = 1; i < size; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::cycle:
      if (size < 3) throw std::invalid_argument("cycle needs at least 3 nodes");
      for (int i = 1; i < size; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(1, size);
      break;
    case Family::complete:
      for (int i = 1; i <= size; ++i)
        for (int j = i + 1; j <= size; ++j) edges.emplace_back(i, j);
      break;
    case Family::diamond:
      if (size != 4) throw std::invalid_argument("diamond has exactly 4 nodes");
      edges = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}};
      break;
    case Family::star:
      for (int i = 2; i <= size; ++i) edges.emplace_back(1, i);
      break;
  }
  return Graph::from_edges(size, edges);
}

Graph parse_family(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw ParseError("family must be NAME:SIZE");
  const auto name = spec.substr(0, colon);
  const auto size_text = spec.substr(colon + 1);
  int size = 0;
  auto [ptr, ec] = std::from_chars(size_text.data(), size_text.data() + size_text.size(), size);
  if (ec != std::errc{} || ptr != size_text.data() + size_text.size()) {
    throw ParseError("bad family size '" + std::string(size_text) + "'");
  }
  for (Family f : {Family::path, Family::cycle, Family::complete, Family::diamond, Family::star}) {
    if (family_name(f) == name) {
      try {
        return family_graph(f, size);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
    }
  }
  throw ParseError("unknown family '" + std::string(name) + "'");
}

// ------------------------------------------------------------- structure

Graph induced_subgraph(const Graph& g, const NodeSet& subset) {
  if (subset.universe() != g.node_count()) {
    throw std::invalid_argument("node set universe does not match graph");
  }
  if (subset.empty()) throw std::invalid_argument("induced subgraph of empty node set");
  const auto labels = subset.labels();
  std::vector<std::pair<int, int>> edges;
  for (std::size_t a = 0; a < labels.size(); ++a) {
    for (std::size_t b = a + 1; b < labels.size(); ++b) {
      if (g.adjacent(labels[a], labels[b])) {
        edges.emplace_back(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
      }
    }
  }
  return Graph::from_edges(static_cast<int>(labels.size()), edges);
}

NodeSet lift_to_parent(const NodeSet& local, const NodeSet& selection) {
  if (local.universe() != selection.size()) {
    throw std::invalid_argument("local node set does not match selection size");
  }
  if (selection.size() == selection.universe()) return local;
  const auto labels = selection.labels();
  Mask bits = 0;
  for (int label : local.labels()) bits |= bit_of(labels[label - 1]);
  return {selection.universe(), bits};
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int shift = a.node_count();
  auto edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph::from_edges(shift + b.node_count(), edges);
}

std::vector<NodeSet> connected_components(const Graph& g) {
  std::vector<NodeSet> out;
  for (Mask c : mask_components(g.adjacency(), full_mask(g.node_count()))) {
    out.emplace_back(g.node_count(), c);
  }
  return out;
}

bool induces_cycle(std::span<const Mask> adjacency, Mask subset) {
  if (popcount(subset) < 3) return false;
  for (Mask m = subset; m != 0; m &= m - 1) {
    if (popcount(adjacency[std::countr_zero(m)] & subset) != 2) return false;
  }
  return mask_connected(adjacency, subset);
}

bool induces_diamond(std::span<const Mask> adjacency, Mask subset) {
  if (popcount(subset) != 4) return false;
  int threes = 0;
  Mask twos = 0;
  for (Mask m = subset; m != 0; m &= m - 1) {
    const int idx = std::countr_zero(m);
    const int d = popcount(adjacency[idx] & subset);
    if (d == 3) {
      ++threes;
    } else if (d == 2) {
      twos |= Mask{1} << idx;
    } else {
      return false;
    }
  }
  if (threes != 2 || popcount(twos) != 2) return false;
  const int first = std::countr_zero(twos);
  return (adjacency[first] & twos) == 0;
}

bool is_cycle_graph(const Graph& g) {
  return induces_cycle(g.adjacency(), full_mask(g.node_count()));
}

bool is_diamond(const Graph& g) {
  return induces_diamond(g.adjacency(), full_mask(g.node_count()));
}

std::vector<int> connected_extension_order(const Graph& g, std::span<const int> seed) {
  if (!g.is_connected()) throw std::invalid_argument("connected ordering of a disconnected graph");
  const int n = g.node_count();
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  Mask prefix = 0;
  for (int label : seed) {
    if (label < 1 || label > n || (prefix & bit_of(label)) != 0) {
      throw std::invalid_argument("seed must list distinct nodes of the graph");
    }
    prefix |= bit_of(label);
    if (!mask_connected(g.adjacency(), prefix)) {
      throw std::invalid_argument("seed prefix does not induce a connected subgraph");
    }
    order.push_back(label);
  }
  if (order.empty()) {
    order.push_back(1);
    prefix = bit_of(1);
  }
  while (static_cast<int>(order.size()) < n) {
    Mask frontier = 0;
    for (Mask m = prefix; m != 0; m &= m - 1) frontier |= g.adjacency()[std::countr_zero(m)];
    frontier &= ~prefix;
    const int next = lowest_label(frontier);
    order.push_back(next);
    prefix |= bit_of(next);
  }
  return order;
}

}  // namespace graphfano
