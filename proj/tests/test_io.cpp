#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "pamet/io/csv.hpp"
#include "pamet/io/dataset_io.hpp"
#include "pamet/io/report_json.hpp"
#include "pamet/svg.hpp"
#include "pamet/sweep.hpp"
#include "test_support.hpp"

using namespace pamet;
using namespace pamet::testing;
namespace fs = std::filesystem;

namespace {

// Scratch files for the reader tests.
class TempDir {
 public:
  TempDir() {
    dir_ = fs::temp_directory_path() /
           ("pamet_io_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++));
    fs::create_directories(dir_);
  }
  ~TempDir() { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& content) const {
    const fs::path p = dir_ / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p.string();
  }

 private:
  fs::path dir_;
  static inline int counter_ = 0;
};

}  // namespace

TEST_CASE("csv reading: header, quoting, and line-numbered errors") {
  std::istringstream in("x,y\n1,2\n\"a,b\",3\n");
  const io::CsvTable table = io::read_csv(in, "mem");
  CHECK(table.header == std::vector<std::string>{"x", "y"});
  REQUIRE(table.rows.size() == 2);
  CHECK(table.rows[1][0] == "a,b");
  CHECK(table.column("y") == Index{1});
  CHECK_FALSE(table.column("z").has_value());

  std::istringstream ragged("x,y\n1\n");
  CHECK_THROWS_WITH_AS(io::read_csv(ragged, "mem"), "mem:2: expected 2 fields, got 1",
                       std::runtime_error);

  std::istringstream empty("");
  CHECK_THROWS_AS(io::read_csv(empty, "mem"), std::runtime_error);
}

TEST_CASE("scalar formatting is stable and locale-free") {
  CHECK(io::format_scalar(0.1) == "0.1");
  CHECK(io::format_scalar(-2.0) == "-2");
  CHECK(io::format_scalar(std::nan("")) == "nan");
  CHECK(io::parse_scalar("0.25", "mem", 1) == 0.25);
  CHECK_THROWS_AS(io::parse_scalar("abc", "mem", 3), std::runtime_error);
}

TEST_CASE("prediction csv for class payloads") {
  TempDir tmp;
  const std::string path = tmp.file("preds.csv", "y_true,y_pred\n0,0\n1,0\n0,1\n");
  const PredictionSet preds = io::read_predictions_csv(path, LossSpec::zero_one());
  CHECK(preds.size() == 3);
  CHECK(preds.class_count() == 2);
  CHECK(preds.predicted_classes()(2) == 1);

  const std::string missing = tmp.file("missing.csv", "y_true,score\n0,0.5\n");
  CHECK_THROWS_WITH_AS(io::read_predictions_csv(missing, LossSpec::zero_one()),
                       (missing + ": missing column 'y_pred'").c_str(), std::runtime_error);

  const std::string bad = tmp.file("bad.csv", "y_true,y_pred\n0,zero\n");
  CHECK_THROWS_WITH_AS(io::read_predictions_csv(bad, LossSpec::zero_one()),
                       (bad + ":2: not an integer: 'zero'").c_str(), std::runtime_error);
}

TEST_CASE("prediction csv for probability payloads") {
  TempDir tmp;
  const std::string path =
      tmp.file("probs.csv", "y_true,p_0,p_1,p_2\n0,0.6,0.3,0.1\n2,0.2,0.2,0.6\n");
  const PredictionSet preds = io::read_predictions_csv(path, LossSpec::cross_entropy());
  CHECK(preds.class_count() == 3);
  CHECK(preds.predicted_probabilities()(1, 2) == 0.6);
  CHECK_THROWS_AS(io::read_predictions_csv(path, LossSpec::cross_entropy(), 4),
                  std::runtime_error);
}

TEST_CASE("prediction csv for real payloads") {
  TempDir tmp;
  const std::string path = tmp.file("reg.csv", "y_true,y_pred\n1.5,1.25\n-2,0\n");
  const PredictionSet preds = io::read_predictions_csv(path, LossSpec::squared());
  CHECK(preds.true_values()(1) == -2.0);
  CHECK(preds.predicted_values()(0) == 1.25);
}

TEST_CASE("prediction jsonl mirrors the csv schemas") {
  TempDir tmp;
  const std::string path = tmp.file(
      "preds.jsonl", "{\"y_true\":0,\"y_pred\":1}\n\n{\"y_true\":1,\"y_pred\":1}\n");
  const PredictionSet preds = io::read_predictions_jsonl(path, LossSpec::zero_one());
  CHECK(preds.size() == 2);

  const std::string probs = tmp.file(
      "probs.jsonl", "{\"y_true\":0,\"p_0\":0.8,\"p_1\":0.2}\n{\"y_true\":1,\"p_0\":0.5,\"p_1\":0.5}\n");
  const PredictionSet ce = io::read_predictions_jsonl(probs, LossSpec::cross_entropy());
  CHECK(ce.predicted_probabilities()(0, 0) == 0.8);

  const std::string broken = tmp.file("broken.jsonl", "{\"y_true\":0,\"y_pred\":1}\nnot json\n");
  CHECK_THROWS_AS(io::read_predictions_jsonl(broken, LossSpec::zero_one()),
                  std::runtime_error);

  const std::string missing = tmp.file("miss.jsonl", "{\"y_true\":0}\n");
  CHECK_THROWS_AS(io::read_predictions_jsonl(missing, LossSpec::zero_one()),
                  std::runtime_error);
}

TEST_CASE("cost matrix csv must be square") {
  TempDir tmp;
  const MatrixX cost = io::read_cost_matrix_csv(tmp.file("b.csv", "0,1\n5,0\n"));
  CHECK(cost.rows() == 2);
  CHECK(cost(1, 0) == 5.0);
  CHECK_THROWS_AS(io::read_cost_matrix_csv(tmp.file("ragged.csv", "0,1\n5\n")),
                  std::runtime_error);
}

TEST_CASE("marginal and baseline json files") {
  TempDir tmp;
  const LabelDistribution dist =
      io::read_marginal_json(tmp.file("m.json", R"({"probs": [0.7, 0.3]})"));
  CHECK(dist.prob(1) == 0.3);
  const RegressionBaseline baseline = io::read_regression_baseline_json(
      tmp.file("b.json", R"({"constant": 1.5, "risk": 4.0})"));
  CHECK(baseline.constant == 1.5);
  CHECK(baseline.risk == 4.0);
  CHECK_THROWS_AS(io::read_marginal_json(tmp.file("bad.json", R"({"p": []})")),
                  std::runtime_error);
}

TEST_CASE("labeled sample csv: named or indexed label column") {
  TempDir tmp;
  const std::string path =
      tmp.file("data.csv", "f1,label,f2\n0.5,1,a\n0.25,0,b\n0.1,0,c\n");
  const LabeledSample by_name = io::read_labeled_sample_csv(path, "label");
  CHECK(by_name.size() == 3);
  CHECK(by_name.labels(0) == 1);
  CHECK(by_name.rows == std::vector<Index>{0, 1, 2});

  const LabeledSample by_index = io::read_labeled_sample_csv(path, "1");
  CHECK(by_index == by_name);

  CHECK_THROWS_AS(io::read_labeled_sample_csv(path, "nope"), std::runtime_error);
  const std::string bad = tmp.file("bad.csv", "label\n2\n");
  CHECK_THROWS_AS(io::read_labeled_sample_csv(bad, "label"), std::runtime_error);
}

TEST_CASE("degraded dataset export and per-point prediction read-back") {
  TempDir tmp;
  VectorXi labels(4);
  labels << 1, 0, 1, 0;
  LabeledSample sample = make_sample(std::move(labels));
  const std::string csv = io::labeled_sample_to_csv(sample);
  CHECK(csv == "row,label\n0,1\n1,0\n2,1\n3,0\n");

  const std::string path = tmp.file("preds.csv", "y_pred\n1\n0\n1\n1\n");
  const VectorXi preds = io::read_predictions_column_csv(path, 4);
  CHECK(preds(3) == 1);
  CHECK_THROWS_AS(io::read_predictions_column_csv(path, 5), std::runtime_error);
}

TEST_CASE("sweep grid csv has the pinned column order and nan for undefined") {
  SweepGrid grid;
  grid.imbalance_axis = VectorX::Constant(1, 0.25);
  grid.noise_axis = VectorX::Constant(1, 0.0);
  SweepPoint p;
  p.imbalance = 0.25;
  p.noise = 0.0;
  p.seed = 42;
  p.feasible = true;
  p.cells = cells_from_probabilities(0.0, 0.0, 0.25, 0.75);  // all-majority classifier
  p.metrics = panel(p.cells);
  p.error = p.cells.error();
  p.pa = prediction_advantage(0.25, 0.25);
  grid.points = {p};

  const std::string csv = io::sweep_grid_to_csv(grid);
  CHECK(csv ==
        "imbalance,noise,error,pa,kappa,f1,ba,accuracy,tp,tn,pre,rec,seed\n"
        "0.25,0,0.25,0,0,0,0.5,0.75,0,1,nan,0,42\n");
}

TEST_CASE("evaluation report survives a json round trip") {
  VectorXi truth(8), pred(8);
  truth << 1, 0, 0, 0, 1, 0, 0, 0;
  pred << 1, 0, 0, 1, 0, 0, 0, 0;
  const EvaluationReport report =
      evaluate(PredictionSet::from_classes(truth, pred, 2), LossSpec::zero_one());

  const nlohmann::json j = io::to_json(report);
  const EvaluationReport back =
      io::evaluation_report_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back == report);
}

TEST_CASE("non-finite risks survive the json round trip") {
  EvaluationReport report;
  report.n = 1;
  report.loss = LossKind::CrossEntropy;
  report.model_risk = std::numeric_limits<Scalar>::infinity();
  report.bmp = BmpSolution{VectorX::Constant(2, 0.5).eval(), std::log(2.0)};
  report.pa = PaResult{report.model_risk, std::log(2.0),
                       -std::numeric_limits<Scalar>::infinity(), false};
  report.marginal_provenance = MarginalProvenance::SuppliedDistribution;
  const EvaluationReport back =
      io::evaluation_report_from_json(nlohmann::json::parse(io::to_json(report).dump()));
  CHECK(back == report);
}

TEST_CASE("sweep grids and report documents survive a json round trip") {
  const PredictionSource source = synthetic_predictor(0.1);
  VectorXi labels(100);
  for (Index i = 0; i < 100; ++i) labels(i) = static_cast<int>(i % 2);
  VectorX imb(2);
  imb << 0.05, 0.4;  // first point infeasible at noise 0.3
  VectorX noise(1);
  noise << 0.3;
  const SweepGrid grid = run_sweep(make_sample(std::move(labels)), imb, noise, source, 5, 500);
  REQUIRE_FALSE(grid.points[0].feasible);

  const SweepGrid back = io::sweep_grid_from_json(nlohmann::json::parse(io::to_json(grid).dump()));
  CHECK(back == grid);

  io::ReportDocument doc;
  doc.version = "0.1.0";
  doc.command = "sweep";
  doc.generated_at = io::current_timestamp_utc();
  doc.config = {{"seed", 5}};
  doc.notes = {{"zero_crossings", nlohmann::json::array()}};
  doc.report = grid;
  const io::ReportDocument doc_back =
      io::report_document_from_json(nlohmann::json::parse(io::to_json(doc).dump()));
  CHECK(doc_back == doc);
}

TEST_CASE("svg writer emits one polyline per gap-free series") {
  ChartSeries up;
  up.label = "up";
  up.color = "#2ca02c";
  up.x = VectorX::LinSpaced(5, 0.1, 0.5);
  up.y = VectorX::LinSpaced(5, -0.5, 0.9);
  ChartSeries gap = up;
  gap.label = "gap";
  gap.color = "#1f77b4";
  gap.y(2) = std::nan("");

  const std::string svg =
      line_chart_svg("demo", "minority fraction", "metric", std::vector<ChartSeries>{up, gap});
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("#2ca02c") != std::string::npos);
  CHECK(svg.find("stroke-dasharray") != std::string::npos);  // zero line present

  std::size_t polylines = 0, pos = 0;
  while ((pos = svg.find("<polyline", pos)) != std::string::npos) {
    ++polylines;
    pos += 9;
  }
  CHECK(polylines == 3);  // one for `up`, two segments for `gap`

  // single point still renders
  ChartSeries dot;
  dot.label = "dot";
  dot.color = "#000";
  dot.x = VectorX::Constant(1, 0.3);
  dot.y = VectorX::Constant(1, 0.3);
  const std::string tiny = line_chart_svg("dot", "x", "y", std::vector<ChartSeries>{dot});
  CHECK(tiny.find("</svg>") != std::string::npos);
}
