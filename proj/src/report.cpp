#include "graphfano/report.hpp"

#include <iomanip>
#include <ostream>

namespace graphfano {

using nlohmann::json;

json to_json(const NodeSet& s) { return s.labels(); }

json to_json(const NestedSet& n) {
  json out = json::array();
  for (const auto& s : n) out.push_back(to_json(s));
  return out;
}

json to_json(const WallReport& r) {
  json components = json::array();
  for (const auto& c : r.components) components.push_back(to_json(c));
  return {
      {"nested_set", to_json(r.wall)},
      {"J", to_json(r.j)},
      {"J_prime", to_json(r.j_prime)},
      {"union", to_json(r.union_set)},
      {"components", components},
      {"m", r.m},
      {"a", r.a},
      {"intersection_number", r.intersection_number},
      {"a_oracle", r.a_oracle},
      {"agree", r.agree},
  };
}

json to_json(const Witness& w) {
  json out = {{"kind", std::string(witness_kind_name(w.kind))}};
  if (w.subset) out["subset"] = to_json(*w.subset);
  if (w.nested_set) out["nested_set"] = to_json(*w.nested_set);
  if (w.report) out["wall"] = to_json(*w.report);
  return out;
}

json to_json(const Classification& c) {
  json out = {
      {"fano", c.fano},
      {"weak_fano", c.weak_fano},
      {"method", std::string(method_name(c.method))},
      {"min_a", c.min_a ? json(*c.min_a) : json(nullptr)},
  };
  return out;
}

json to_json(const Fan& f) {
  json rays = json::array();
  for (const auto& r : f.rays) {
    json coords = json::array();
    for (Eigen::Index i = 0; i < r.size(); ++i) coords.push_back(r(i));
    rays.push_back(coords);
  }
  json out = {{"dim", f.dim}, {"rays", rays}, {"max_cones", f.max_cones}};
  if (f.generators.size() == f.rays.size()) {
    json generators = json::array();
    for (const auto& g : f.generators) generators.push_back(to_json(g));
    out["generators"] = generators;
  }
  return out;
}

json to_json(const CensusReport& r) {
  json mismatches = json::array();
  for (const auto& m : r.mismatches) {
    json reports = json::array();
    for (const auto& w : m.reports) reports.push_back(to_json(w));
    mismatches.push_back({{"graph6", m.graph6},
                          {"detail", m.detail},
                          {"walls", to_json(m.walls)},
                          {"theorem", to_json(m.theorem)},
                          {"wall_reports", reports}});
  }
  return {
      {"n", r.n ? json(*r.n) : json(nullptr)},
      {"graphs_total", r.graphs_total},
      {"graphs_connected", r.graphs_connected},
      {"fano_count", r.fano_count},
      {"weak_fano_count", r.weak_fano_count},
      {"neither_count", r.neither_count},
      {"walls_checked", r.walls_checked},
      {"mismatches", mismatches},
      {"budget_exceeded", r.budget_exceeded},
      {"runtime_ms", r.runtime_ms},
  };
}

json graph_to_json(const Graph& g, const std::string& source) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.node_count()}, {"edges", edges}, {"source", source}};
}

json ReportDocument::to_json() const {
  json out = {{"schema_version", kSchemaVersion}, {"input", input}};
  if (classification) out["classification"] = graphfano::to_json(*classification);
  if (walls) {
    json rows = json::array();
    for (const auto& r : *walls) rows.push_back(graphfano::to_json(r));
    out["walls"] = rows;
  }
  if (fan) out["fan"] = graphfano::to_json(*fan);
  if (witness) out["witness"] = graphfano::to_json(*witness);
  if (census) out["census"] = graphfano::to_json(*census);
  return out;
}

// -------------------------------------------------------------------- text

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

void write_classification_text(std::ostream& out, const Classification& c) {
  out << "fano: " << yes_no(c.fano) << ", weak_fano: " << yes_no(c.weak_fano) << '\n';
  out << "method: " << method_name(c.method) << '\n';
  out << "min_a: ";
  if (c.min_a) {
    out << *c.min_a << '\n';
  } else {
    out << "none\n";
  }
}

void write_walls_text(std::ostream& out, const std::vector<WallReport>& reports) {
  out << "walls: " << reports.size() << '\n';
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    out << "  [" << i << "] " << r.wall.to_string() << "  J=" << r.j.to_string()
        << " J'=" << r.j_prime.to_string() << " union=" << r.union_set.to_string()
        << " m=" << r.m << " a=" << r.a << " intersection=" << r.intersection_number
        << " oracle=" << r.a_oracle << (r.agree ? "" : " MISMATCH") << '\n';
  }
}

void write_fan_text(std::ostream& out, const Fan& f) {
  out << "fan: dim " << f.dim << ", " << f.rays.size() << " rays, " << f.max_cones.size()
      << " maximal cones\n";
  for (std::size_t i = 0; i < f.rays.size(); ++i) {
    out << "  ray " << i << ": (";
    for (Eigen::Index k = 0; k < f.rays[i].size(); ++k) {
      out << (k == 0 ? "" : ",") << f.rays[i](k);
    }
    out << ')';
    if (f.generators.size() == f.rays.size()) out << "  e_" << f.generators[i].to_string();
    out << '\n';
  }
  for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
    out << "  cone " << c << ":";
    for (std::size_t idx : f.max_cones[c]) out << ' ' << idx;
    out << '\n';
  }
}

void write_witness_text(std::ostream& out, const Witness& w) {
  if (w.subset) {
    out << (w.kind == WitnessKind::induced_cycle ? "induced cycle: " : "induced diamond: ")
        << w.subset->to_string() << '\n';
  }
  if (w.nested_set) out << "nested set: " << w.nested_set->to_string() << '\n';
  if (w.report) {
    const auto& r = *w.report;
    out << "J: " << r.j.to_string() << ", J': " << r.j_prime.to_string()
        << ", union: " << r.union_set.to_string() << ", m=" << r.m << ", a=" << r.a
        << ", intersection=" << r.intersection_number << '\n';
  }
}

void write_census_text(std::ostream& out, const CensusReport& r) {
  out << "n: ";
  if (r.n) {
    out << *r.n << '\n';
  } else {
    out << "corpus\n";
  }
  out << "graphs_total: " << r.graphs_total << '\n'
      << "graphs_connected: " << r.graphs_connected << '\n'
      << "fano_count: " << r.fano_count << '\n'
      << "weak_fano_count: " << r.weak_fano_count << '\n'
      << "neither_count: " << r.neither_count << '\n'
      << "walls_checked: " << r.walls_checked << '\n'
      << "budget_exceeded: " << r.budget_exceeded.size() << '\n'
      << "mismatches: " << r.mismatches.size() << '\n';
  for (const auto& m : r.mismatches) out << "  " << m.graph6 << ": " << m.detail << '\n';
  out << "runtime_ms: " << r.runtime_ms << '\n';
}

}  // namespace graphfano
