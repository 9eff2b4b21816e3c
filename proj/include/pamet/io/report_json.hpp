#pragma once

#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "pamet/evaluate.hpp"
#include "pamet/sweep.hpp"

namespace pamet::io {

/// Wrapper every command writes: the payload plus tool metadata and an
/// echo of the run configuration. parse(serialize(doc)) == doc, with
/// non-finite scalars carried as strings.
struct ReportDocument {
  std::string tool = "pamet";
  std::string version;
  std::string command;
  std::string generated_at;     // ISO-8601 UTC
  nlohmann::json config = nlohmann::json::object();
  nlohmann::json notes = nlohmann::json::object();  // crossings, warnings, ...
  std::variant<EvaluationReport, SweepGrid> report;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

nlohmann::json to_json(const EvaluationReport& report);
nlohmann::json to_json(const SweepGrid& grid);
nlohmann::json to_json(const ReportDocument& doc);

EvaluationReport evaluation_report_from_json(const nlohmann::json& j);
SweepGrid sweep_grid_from_json(const nlohmann::json& j);
ReportDocument report_document_from_json(const nlohmann::json& j);

std::string current_timestamp_utc();

}  // namespace pamet::io
