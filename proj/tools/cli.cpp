#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include "graphfano/census.hpp"
#include "graphfano/classifier.hpp"
#include "graphfano/fan.hpp"
#include "graphfano/graph.hpp"
#include "graphfano/report.hpp"

namespace graphfano::cli {

namespace {

struct InputFlags {
  std::string path;
  std::string graph6;
  std::string family;
};

struct LoadedGraph {
  Graph graph;
  std::string source;
};

void add_input_flags(CLI::App& cmd, InputFlags& flags) {
  auto* input = cmd.add_option("--input", flags.path, "Edge-list file");
  auto* g6 = cmd.add_option("--graph6", flags.graph6, "graph6 string");
  auto* family = cmd.add_option("--family", flags.family,
                                "Named family NAME:SIZE (path, cycle, complete, diamond, star)");
  input->excludes(g6, family);
  g6->excludes(family);
}

LoadedGraph load(const InputFlags& flags) {
  if (!flags.path.empty()) {
    std::ifstream in(flags.path);
    if (!in) throw ParseError("cannot open " + flags.path);
    return {parse_edge_list(in), "edge_list"};
  }
  if (!flags.graph6.empty()) return {parse_graph6(flags.graph6), "graph6"};
  if (!flags.family.empty()) return {parse_family(flags.family), "family"};
  throw ParseError("one of --input, --graph6 or --family is required");
}

void emit(std::ostream& out, const ReportDocument& doc) { out << doc.to_json().dump(2) << '\n'; }

struct ClassifyFlags {
  InputFlags input;
  std::string mode;
  bool walls = false;
  bool fan = false;
  bool json = false;
  std::uint64_t budget = kDefaultBudget;
};

int cmd_classify(const ClassifyFlags& flags, std::ostream& out, std::ostream& err) {
  const auto loaded = load(flags.input);
  const Graph& g = loaded.graph;

  ReportDocument doc;
  doc.input = graph_to_json(g, loaded.source);
  Classification result;
  bool walls_available = true;
  if (flags.mode.empty()) {
    try {
      result = classify(g, Method::both, flags.budget);
    } catch (const BudgetExceeded&) {
      err << "notice: wall computation exceeds the search budget; classifying by theorem only\n";
      result = classify(g, Method::theorem, flags.budget);
      walls_available = false;
    }
  } else {
    const Method mode = parse_method(flags.mode);
    result = classify(g, mode, flags.budget);
    walls_available = mode != Method::theorem;
  }
  if (result.witness && result.witness->kind != WitnessKind::bad_wall && g.is_connected() &&
      !result.witness->report && walls_available) {
    result.witness = complete_witness(g, *result.witness);
  }

  doc.classification = result;
  doc.witness = result.witness;
  if (flags.walls) {
    if (walls_available) {
      doc.walls = wall_reports(g, flags.budget);
    } else {
      err << "notice: wall table unavailable in theorem mode\n";
    }
  }
  if (flags.fan) {
    Budget budget(flags.budget);
    doc.fan = build_fan(g, &budget);
  }

  if (flags.json) {
    emit(out, doc);
    return kOk;
  }
  out << "graph: n=" << g.node_count() << " edges=" << g.edge_count() << " graph6=" << encode_graph6(g)
      << '\n';
  write_classification_text(out, result);
  if (doc.witness) write_witness_text(out, *doc.witness);
  if (doc.walls) write_walls_text(out, *doc.walls);
  if (doc.fan) write_fan_text(out, *doc.fan);
  return kOk;
}

struct WitnessFlags {
  InputFlags input;
  bool json = false;
};

int cmd_witness(const WitnessFlags& flags, std::ostream& out, std::ostream& err) {
  const auto loaded = load(flags.input);
  const Graph& g = loaded.graph;
  const auto verdict = is_weak_fano_theorem(g);
  if (verdict.weak_fano) {
    err << "graph is weak Fano; no witness exists\n";
    return kNoWitness;
  }
  const Witness witness = complete_witness(g, *verdict.witness);
  if (!witness.report || witness.report->a != -3 || !witness.report->agree) {
    err << "internal error: constructed wall does not have a = -3\n";
    return kDisagreement;
  }
  if (flags.json) {
    ReportDocument doc;
    doc.input = graph_to_json(g, loaded.source);
    doc.witness = witness;
    emit(out, doc);
  } else {
    write_witness_text(out, witness);
  }
  return kOk;
}

struct ValidateFlags {
  int n = 0;
  std::string corpus;
  unsigned jobs = 1;
  bool connected_only = false;
  bool json = false;
  std::uint64_t budget = kDefaultBudget;
};

int cmd_validate(const ValidateFlags& flags, std::ostream& out, std::ostream& err) {
  CensusOptions options{flags.connected_only, std::max(1U, flags.jobs), flags.budget};
  CensusReport report;
  ReportDocument doc;
  if (!flags.corpus.empty()) {
    std::ifstream in(flags.corpus);
    if (!in) throw ParseError("cannot open " + flags.corpus);
    const auto corpus = read_graph6_corpus(in);
    report = cross_validate(corpus, options);
    doc.input = {{"corpus", flags.corpus}, {"graphs", corpus.size()}, {"source", "graph6"}};
  } else if (flags.n >= 1 && flags.n <= 8) {
    report = cross_validate(flags.n, options);
    doc.input = {{"n", flags.n}, {"connected_only", flags.connected_only}, {"source", "labeled"}};
  } else {
    throw ParseError("validate needs --n in 1..8 or --corpus PATH");
  }
  if (!report.budget_exceeded.empty()) {
    err << "notice: " << report.budget_exceeded.size() << " graphs exceeded the search budget\n";
  }
  if (flags.json) {
    doc.census = report;
    emit(out, doc);
  } else {
    write_census_text(out, report);
  }
  return report.mismatches.empty() ? kOk : kDisagreement;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fano and weak Fano tests for toric varieties of graph associahedra", "graphfano"};
  app.require_subcommand(1);

  ClassifyFlags classify_flags;
  auto* classify_cmd = app.add_subcommand("classify", "Classify one graph");
  add_input_flags(*classify_cmd, classify_flags.input);
  classify_cmd->add_option("--mode", classify_flags.mode, "walls, theorem or both (default both)")
      ->check(CLI::IsMember({"walls", "theorem", "both"}));
  classify_cmd->add_flag("--walls", classify_flags.walls, "Include the wall table");
  classify_cmd->add_flag("--fan", classify_flags.fan, "Include rays and maximal cones");
  classify_cmd->add_flag("--json", classify_flags.json, "JSON report");
  classify_cmd->add_flag("--text", "Plain-text report (default)");
  classify_cmd->add_option("--budget", classify_flags.budget, "Search-node cap per component");

  WitnessFlags witness_flags;
  auto* witness_cmd = app.add_subcommand("witness", "Certify that a graph is not weak Fano");
  add_input_flags(*witness_cmd, witness_flags.input);
  witness_cmd->add_flag("--json", witness_flags.json, "JSON report");
  witness_cmd->add_flag("--text", "Plain-text report (default)");

  ValidateFlags validate_flags;
  auto* validate_cmd = app.add_subcommand("validate", "Cross-validate both methods exhaustively");
  validate_cmd->add_option("--n", validate_flags.n, "Node count of the labeled census (1..8)");
  validate_cmd->add_option("--corpus", validate_flags.corpus, "File of graph6 lines");
  validate_cmd->add_option("--jobs", validate_flags.jobs, "Worker threads");
  validate_cmd->add_flag("--connected-only", validate_flags.connected_only,
                         "Only connected labeled graphs");
  validate_cmd->add_flag("--json", validate_flags.json, "JSON report");
  validate_cmd->add_flag("--text", "Plain-text report (default)");
  validate_cmd->add_option("--budget", validate_flags.budget, "Search-node cap per component");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(classify_flags, out, err);
    if (witness_cmd->parsed()) return cmd_witness(witness_flags, out, err);
    return cmd_validate(validate_flags, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const MethodDisagreement& e) {
    err << "internal disagreement: " << e.what() << '\n';
    return kDisagreement;
  } catch (const InternalInconsistency& e) {
    err << "internal error: " << e.what() << '\n';
    return kDisagreement;
  }
}

}  // namespace graphfano::cli
