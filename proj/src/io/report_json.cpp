#include "pamet/io/report_json.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <stdexcept>

namespace pamet::io {

namespace {

using nlohmann::json;

// JSON has no infinities; carry non-finite values as strings.
json encode_scalar(Scalar v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

Scalar decode_scalar(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "nan") return std::nan("");
    if (s == "inf") return std::numeric_limits<Scalar>::infinity();
    if (s == "-inf") return -std::numeric_limits<Scalar>::infinity();
    throw std::runtime_error("unexpected scalar string '" + s + "'");
  }
  return j.get<Scalar>();
}

json encode_optional(const std::optional<Scalar>& v) {
  if (!v) return nullptr;
  return encode_scalar(*v);
}

std::optional<Scalar> decode_optional(const json& j) {
  if (j.is_null()) return std::nullopt;
  return decode_scalar(j);
}

json encode_vector(const VectorX& v) {
  json arr = json::array();
  for (Index i = 0; i < v.size(); ++i) arr.push_back(encode_scalar(v(i)));
  return arr;
}

VectorX decode_vector(const json& arr) {
  VectorX v(static_cast<Index>(arr.size()));
  for (std::size_t i = 0; i < arr.size(); ++i) v(static_cast<Index>(i)) = decode_scalar(arr[i]);
  return v;
}

json encode_marginal(const LabelDistribution& dist) {
  return {{"probs", encode_vector(dist.probs())}, {"class_ids", dist.class_ids()}};
}

LabelDistribution decode_marginal(const json& j) {
  return {decode_vector(j.at("probs")), j.at("class_ids").get<std::vector<int>>()};
}

json encode_bmp(const BmpSolution& bmp) {
  json out{{"risk", encode_scalar(bmp.bmp_risk)}};
  if (const int* id = std::get_if<int>(&bmp.constant_prediction)) {
    out["prediction"] = {{"type", "class"}, {"value", *id}};
  } else if (const Scalar* v = std::get_if<Scalar>(&bmp.constant_prediction)) {
    out["prediction"] = {{"type", "value"}, {"value", encode_scalar(*v)}};
  } else {
    out["prediction"] = {{"type", "distribution"},
                         {"value", encode_vector(std::get<VectorX>(bmp.constant_prediction))}};
  }
  return out;
}

BmpSolution decode_bmp(const json& j) {
  BmpSolution bmp;
  bmp.bmp_risk = decode_scalar(j.at("risk"));
  const json& pred = j.at("prediction");
  const std::string type = pred.at("type").get<std::string>();
  if (type == "class")
    bmp.constant_prediction = pred.at("value").get<int>();
  else if (type == "value")
    bmp.constant_prediction = decode_scalar(pred.at("value"));
  else if (type == "distribution")
    bmp.constant_prediction = decode_vector(pred.at("value"));
  else
    throw std::runtime_error("unknown constant-prediction type '" + type + "'");
  return bmp;
}

json encode_pa(const PaResult& pa) {
  return {{"model_risk", encode_scalar(pa.model_risk)},
          {"bmp_risk", encode_scalar(pa.bmp_risk)},
          {"pa", encode_scalar(pa.pa)},
          {"trivial_problem", pa.trivial_problem}};
}

PaResult decode_pa(const json& j) {
  PaResult pa;
  pa.model_risk = decode_scalar(j.at("model_risk"));
  pa.bmp_risk = decode_scalar(j.at("bmp_risk"));
  pa.pa = decode_scalar(j.at("pa"));
  pa.trivial_problem = j.at("trivial_problem").get<bool>();
  return pa;
}

json encode_cells(const ConfusionCells& cells) {
  return {{"a", encode_scalar(cells.a)},
          {"b", encode_scalar(cells.b)},
          {"c", encode_scalar(cells.c)},
          {"d", encode_scalar(cells.d)},
          {"swapped", cells.swapped}};
}

ConfusionCells decode_cells(const json& j) {
  ConfusionCells cells;
  cells.a = decode_scalar(j.at("a"));
  cells.b = decode_scalar(j.at("b"));
  cells.c = decode_scalar(j.at("c"));
  cells.d = decode_scalar(j.at("d"));
  cells.swapped = j.at("swapped").get<bool>();
  return cells;
}

json encode_panel(const MetricPanel& m) {
  return {{"pa", encode_optional(m.pa)},     {"tp", encode_optional(m.tp)},
          {"tn", encode_optional(m.tn)},     {"ba", encode_optional(m.ba)},
          {"pre", encode_optional(m.pre)},   {"rec", encode_optional(m.rec)},
          {"f1", encode_optional(m.f1)},     {"kappa", encode_optional(m.kappa)},
          {"accuracy", encode_scalar(m.accuracy)}};
}

MetricPanel decode_panel(const json& j) {
  MetricPanel m;
  m.pa = decode_optional(j.at("pa"));
  m.tp = decode_optional(j.at("tp"));
  m.tn = decode_optional(j.at("tn"));
  m.ba = decode_optional(j.at("ba"));
  m.pre = decode_optional(j.at("pre"));
  m.rec = decode_optional(j.at("rec"));
  m.f1 = decode_optional(j.at("f1"));
  m.kappa = decode_optional(j.at("kappa"));
  m.accuracy = decode_scalar(j.at("accuracy"));
  return m;
}

json encode_interval(const RiskInterval& interval) {
  return {{"lo", encode_scalar(interval.lo)},
          {"hi", encode_scalar(interval.hi)},
          {"confidence", encode_scalar(interval.confidence)}};
}

RiskInterval decode_interval(const json& j) {
  RiskInterval interval;
  interval.lo = decode_scalar(j.at("lo"));
  interval.hi = decode_scalar(j.at("hi"));
  interval.confidence = decode_scalar(j.at("confidence"));
  return interval;
}

MarginalProvenance provenance_from_string(const std::string& s) {
  if (s == "eval_labels") return MarginalProvenance::EvalLabels;
  if (s == "supplied_distribution") return MarginalProvenance::SuppliedDistribution;
  if (s == "supplied_baseline") return MarginalProvenance::SuppliedBaseline;
  throw std::runtime_error("unknown marginal provenance '" + s + "'");
}

}  // namespace

json to_json(const EvaluationReport& report) {
  json out{{"n", report.n},
           {"loss", to_string(report.loss)},
           {"model_risk", encode_scalar(report.model_risk)},
           {"bmp", encode_bmp(report.bmp)},
           {"pa", encode_pa(report.pa)},
           {"marginal_provenance", to_string(report.marginal_provenance)}};
  if (report.marginal) out["marginal"] = encode_marginal(*report.marginal);
  if (report.confusion)
    out["confusion"] = {{"cells", encode_cells(report.confusion->cells)},
                        {"panel", encode_panel(report.confusion->metrics)}};
  if (report.risk_interval) out["risk_interval"] = encode_interval(*report.risk_interval);
  return out;
}

EvaluationReport evaluation_report_from_json(const json& j) {
  EvaluationReport report;
  report.n = j.at("n").get<Index>();
  const auto kind = loss_kind_from_string(j.at("loss").get<std::string>());
  if (!kind) throw std::runtime_error("unknown loss kind in report");
  report.loss = *kind;
  report.model_risk = decode_scalar(j.at("model_risk"));
  report.bmp = decode_bmp(j.at("bmp"));
  report.pa = decode_pa(j.at("pa"));
  report.marginal_provenance =
      provenance_from_string(j.at("marginal_provenance").get<std::string>());
  if (j.contains("marginal")) report.marginal = decode_marginal(j.at("marginal"));
  if (j.contains("confusion"))
    report.confusion = ConfusionBlock{decode_cells(j.at("confusion").at("cells")),
                                      decode_panel(j.at("confusion").at("panel"))};
  if (j.contains("risk_interval")) report.risk_interval = decode_interval(j.at("risk_interval"));
  return report;
}

json to_json(const SweepGrid& grid) {
  json points = json::array();
  for (const SweepPoint& p : grid.points) {
    json jp{{"imbalance", encode_scalar(p.imbalance)},
            {"noise", encode_scalar(p.noise)},
            {"seed", p.seed},
            {"feasible", p.feasible}};
    if (!p.feasible) {
      jp["infeasible_reason"] = p.infeasible_reason;
    } else {
      jp["error"] = encode_scalar(p.error);
      jp["cells"] = encode_cells(p.cells);
      jp["panel"] = encode_panel(p.metrics);
      jp["pa"] = encode_pa(p.pa);
    }
    points.push_back(std::move(jp));
  }
  return {{"imbalance_axis", encode_vector(grid.imbalance_axis)},
          {"noise_axis", encode_vector(grid.noise_axis)},
          {"points", std::move(points)}};
}

SweepGrid sweep_grid_from_json(const json& j) {
  SweepGrid grid;
  grid.imbalance_axis = decode_vector(j.at("imbalance_axis"));
  grid.noise_axis = decode_vector(j.at("noise_axis"));
  for (const json& jp : j.at("points")) {
    SweepPoint p;
    p.imbalance = decode_scalar(jp.at("imbalance"));
    p.noise = decode_scalar(jp.at("noise"));
    p.seed = jp.at("seed").get<std::uint64_t>();
    p.feasible = jp.at("feasible").get<bool>();
    if (!p.feasible) {
      p.infeasible_reason = jp.at("infeasible_reason").get<std::string>();
    } else {
      p.error = decode_scalar(jp.at("error"));
      p.cells = decode_cells(jp.at("cells"));
      p.metrics = decode_panel(jp.at("panel"));
      p.pa = decode_pa(jp.at("pa"));
    }
    grid.points.push_back(std::move(p));
  }
  return grid;
}

json to_json(const ReportDocument& doc) {
  json out{{"tool", doc.tool},
           {"version", doc.version},
           {"command", doc.command},
           {"generated_at", doc.generated_at},
           {"config", doc.config},
           {"notes", doc.notes}};
  if (const auto* eval = std::get_if<EvaluationReport>(&doc.report)) {
    out["report_type"] = "evaluation";
    out["report"] = to_json(*eval);
  } else {
    out["report_type"] = "sweep";
    out["report"] = to_json(std::get<SweepGrid>(doc.report));
  }
  return out;
}

ReportDocument report_document_from_json(const json& j) {
  ReportDocument doc;
  doc.tool = j.at("tool").get<std::string>();
  doc.version = j.at("version").get<std::string>();
  doc.command = j.at("command").get<std::string>();
  doc.generated_at = j.at("generated_at").get<std::string>();
  doc.config = j.at("config");
  doc.notes = j.at("notes");
  const std::string type = j.at("report_type").get<std::string>();
  if (type == "evaluation")
    doc.report = evaluation_report_from_json(j.at("report"));
  else if (type == "sweep")
    doc.report = sweep_grid_from_json(j.at("report"));
  else
    throw std::runtime_error("unknown report type '" + type + "'");
  return doc;
}

std::string current_timestamp_utc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace pamet::io
