#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "graphfano/census.hpp"
#include "graphfano/classifier.hpp"
#include "graphfano/fan.hpp"

namespace graphfano {

inline constexpr const char* kSchemaVersion = "1";

// JSON projections. Objects use sorted keys and integers only, so output is
// byte-stable for a fixed input.
nlohmann::json to_json(const NodeSet& s);
nlohmann::json to_json(const NestedSet& n);
nlohmann::json to_json(const WallReport& r);
nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const Classification& c);
nlohmann::json to_json(const Fan& f);
nlohmann::json to_json(const CensusReport& r);
nlohmann::json graph_to_json(const Graph& g, const std::string& source);

/// Top-level document: schema_version, input, and whichever of
/// classification, walls, fan, witness, census are present.
struct ReportDocument {
  nlohmann::json input;
  std::optional<Classification> classification;
  std::optional<std::vector<WallReport>> walls;
  std::optional<Fan> fan;
  std::optional<Witness> witness;
  std::optional<CensusReport> census;

  nlohmann::json to_json() const;
};

// Plain-text renderings used by the CLI.
void write_classification_text(std::ostream& out, const Classification& c);
void write_walls_text(std::ostream& out, const std::vector<WallReport>& reports);
void write_fan_text(std::ostream& out, const Fan& f);
void write_witness_text(std::ostream& out, const Witness& w);
void write_census_text(std::ostream& out, const CensusReport& r);

}  // namespace graphfano
