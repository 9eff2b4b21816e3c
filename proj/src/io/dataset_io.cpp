#include "pamet/io/dataset_io.hpp"

#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "pamet/io/csv.hpp"

namespace pamet::io {

namespace {

using nlohmann::json;

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& err) {
    throw std::runtime_error(path + ": " + err.what());
  }
  return doc;
}

bool wants_probability_payload(const LossSpec& loss) {
  return loss.kind() == LossKind::CrossEntropy;
}

bool wants_real_payload(const LossSpec& loss) {
  return loss.kind() == LossKind::Squared || loss.kind() == LossKind::Absolute;
}

int resolve_class_count(const LossSpec& loss, std::optional<int> requested, int seen) {
  if (loss.kind() == LossKind::CostSensitive) {
    const int k = static_cast<int>(loss.cost_matrix().rows());
    if (requested && *requested != k)
      throw std::runtime_error("requested class count conflicts with the cost matrix");
    return std::max(k, seen);
  }
  if (requested) {
    if (*requested < seen)
      throw std::runtime_error("class ids exceed the requested class count");
    return *requested;
  }
  return std::max(seen, 2);
}

PredictionSet assemble_class_payload(std::vector<int> truth, std::vector<int> pred,
                                     const LossSpec& loss, std::optional<int> class_count) {
  int seen = 0;
  for (const int y : truth) seen = std::max(seen, y + 1);
  for (const int y : pred) seen = std::max(seen, y + 1);
  const int k = resolve_class_count(loss, class_count, seen);
  VectorXi t(static_cast<Index>(truth.size()));
  VectorXi p(static_cast<Index>(pred.size()));
  for (std::size_t i = 0; i < truth.size(); ++i) t(static_cast<Index>(i)) = truth[i];
  for (std::size_t i = 0; i < pred.size(); ++i) p(static_cast<Index>(i)) = pred[i];
  return PredictionSet::from_classes(std::move(t), std::move(p), k);
}

std::vector<std::string> probability_columns(int k) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) names.push_back("p_" + std::to_string(i));
  return names;
}

}  // namespace

PredictionSet read_predictions_csv(const std::string& path, const LossSpec& loss,
                                   std::optional<int> class_count) {
  const CsvTable table = read_csv_file(path);
  if (table.rows.empty()) throw std::runtime_error(path + ": no records");
  const Index n = static_cast<Index>(table.rows.size());
  const Index truth_col = table.require_column("y_true", path);

  if (wants_probability_payload(loss)) {
    // Count the contiguous p_0.. block.
    int k = 0;
    while (table.column("p_" + std::to_string(k))) ++k;
    if (k < 2) throw std::runtime_error(path + ": cross-entropy needs columns p_0..p_{k-1}");
    if (class_count && *class_count != k)
      throw std::runtime_error(path + ": probability columns disagree with requested class count");
    std::vector<Index> cols;
    for (const std::string& name : probability_columns(k))
      cols.push_back(table.require_column(name, path));
    VectorXi truth(n);
    MatrixX probs(n, k);
    for (Index r = 0; r < n; ++r) {
      const auto& row = table.rows[static_cast<std::size_t>(r)];
      const Index line = r + 2;  // 1-based, after the header
      truth(r) = parse_int(row[static_cast<std::size_t>(truth_col)], path, line);
      for (int j = 0; j < k; ++j)
        probs(r, j) = parse_scalar(row[static_cast<std::size_t>(cols[static_cast<std::size_t>(j)])],
                                   path, line);
    }
    return PredictionSet::from_probabilities(std::move(truth), std::move(probs));
  }

  const Index pred_col = table.require_column("y_pred", path);
  if (wants_real_payload(loss)) {
    VectorX truth(n), pred(n);
    for (Index r = 0; r < n; ++r) {
      const auto& row = table.rows[static_cast<std::size_t>(r)];
      const Index line = r + 2;
      truth(r) = parse_scalar(row[static_cast<std::size_t>(truth_col)], path, line);
      pred(r) = parse_scalar(row[static_cast<std::size_t>(pred_col)], path, line);
    }
    return PredictionSet::from_reals(std::move(truth), std::move(pred));
  }

  std::vector<int> truth, pred;
  truth.reserve(static_cast<std::size_t>(n));
  pred.reserve(static_cast<std::size_t>(n));
  for (Index r = 0; r < n; ++r) {
    const auto& row = table.rows[static_cast<std::size_t>(r)];
    const Index line = r + 2;
    truth.push_back(parse_int(row[static_cast<std::size_t>(truth_col)], path, line));
    pred.push_back(parse_int(row[static_cast<std::size_t>(pred_col)], path, line));
  }
  return assemble_class_payload(std::move(truth), std::move(pred), loss, class_count);
}

PredictionSet read_predictions_jsonl(const std::string& path, const LossSpec& loss,
                                     std::optional<int> class_count) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open");

  std::vector<json> records;
  std::string line;
  Index line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      records.push_back(json::parse(line));
    } catch (const json::parse_error& err) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + err.what());
    }
    if (!records.back().is_object())
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": expected an object");
  }
  if (records.empty()) throw std::runtime_error(path + ": no records");
  const Index n = static_cast<Index>(records.size());

  const auto field = [&](const json& rec, const char* key, Index line) -> const json& {
    const auto it = rec.find(key);
    if (it == rec.end())
      throw std::runtime_error(path + ":" + std::to_string(line) + ": missing field '" + key +
                               "'");
    return *it;
  };

  if (wants_probability_payload(loss)) {
    int k = 0;
    while (records.front().contains("p_" + std::to_string(k))) ++k;
    if (k < 2) throw std::runtime_error(path + ": cross-entropy needs fields p_0..p_{k-1}");
    if (class_count && *class_count != k)
      throw std::runtime_error(path + ": probability fields disagree with requested class count");
    VectorXi truth(n);
    MatrixX probs(n, k);
    for (Index r = 0; r < n; ++r) {
      const json& rec = records[static_cast<std::size_t>(r)];
      truth(r) = field(rec, "y_true", r + 1).get<int>();
      for (int j = 0; j < k; ++j)
        probs(r, j) = field(rec, ("p_" + std::to_string(j)).c_str(), r + 1).get<Scalar>();
    }
    return PredictionSet::from_probabilities(std::move(truth), std::move(probs));
  }

  if (wants_real_payload(loss)) {
    VectorX truth(n), pred(n);
    for (Index r = 0; r < n; ++r) {
      const json& rec = records[static_cast<std::size_t>(r)];
      truth(r) = field(rec, "y_true", r + 1).get<Scalar>();
      pred(r) = field(rec, "y_pred", r + 1).get<Scalar>();
    }
    return PredictionSet::from_reals(std::move(truth), std::move(pred));
  }

  std::vector<int> truth, pred;
  for (Index r = 0; r < n; ++r) {
    const json& rec = records[static_cast<std::size_t>(r)];
    truth.push_back(field(rec, "y_true", r + 1).get<int>());
    pred.push_back(field(rec, "y_pred", r + 1).get<int>());
  }
  return assemble_class_payload(std::move(truth), std::move(pred), loss, class_count);
}

MatrixX read_cost_matrix_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open");
  std::vector<std::vector<Scalar>> rows;
  std::string line;
  Index line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<Scalar> row;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      const std::string_view cell(line.data() + start,
                                  (comma == std::string::npos ? line.size() : comma) - start);
      row.push_back(parse_scalar(cell, path, line_no));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::runtime_error(path + ": empty cost matrix");
  const std::size_t k = rows.size();
  MatrixX cost(static_cast<Index>(k), static_cast<Index>(k));
  for (std::size_t i = 0; i < k; ++i) {
    if (rows[i].size() != k)
      throw std::runtime_error(path + ": cost matrix must be square (row " +
                               std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                               " entries, expected " + std::to_string(k) + ")");
    for (std::size_t j = 0; j < k; ++j)
      cost(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
  }
  return cost;
}

LabelDistribution read_marginal_json(const std::string& path) {
  const json doc = load_json_file(path);
  if (!doc.contains("probs") || !doc["probs"].is_array())
    throw std::runtime_error(path + ": expected {\"probs\": [...]}");
  const auto& arr = doc["probs"];
  VectorX probs(static_cast<Index>(arr.size()));
  for (std::size_t i = 0; i < arr.size(); ++i) probs(static_cast<Index>(i)) = arr[i].get<Scalar>();
  std::vector<int> ids;
  if (doc.contains("class_ids")) ids = doc["class_ids"].get<std::vector<int>>();
  return LabelDistribution(std::move(probs), std::move(ids));
}

RegressionBaseline read_regression_baseline_json(const std::string& path) {
  const json doc = load_json_file(path);
  if (!doc.contains("constant") || !doc.contains("risk"))
    throw std::runtime_error(path + ": expected {\"constant\": c, \"risk\": r}");
  return {doc["constant"].get<Scalar>(), doc["risk"].get<Scalar>()};
}

LabeledSample read_labeled_sample_csv(const std::string& path, const std::string& label_column) {
  const CsvTable table = read_csv_file(path);
  if (table.rows.empty()) throw std::runtime_error(path + ": no data rows");

  Index col;
  if (const auto named = table.column(label_column)) {
    col = *named;
  } else {
    try {
      col = parse_int(label_column, path, 1);
    } catch (const std::exception&) {
      throw std::runtime_error(path + ": no column named '" + label_column + "'");
    }
    if (col < 0 || col >= static_cast<Index>(table.header.size()))
      throw std::runtime_error(path + ": label column index out of range");
  }

  LabeledSample sample;
  const Index n = static_cast<Index>(table.rows.size());
  sample.labels.resize(n);
  sample.rows.reserve(static_cast<std::size_t>(n));
  for (Index r = 0; r < n; ++r) {
    const Index line = r + 2;
    const int label =
        parse_int(table.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)], path,
                  line);
    if (label != 0 && label != 1)
      throw std::runtime_error(path + ":" + std::to_string(line) +
                               ": labels must be 0 or 1, got " + std::to_string(label));
    sample.labels(r) = label;
    sample.rows.push_back(r);
  }
  return sample;
}

std::string sweep_grid_to_csv(const SweepGrid& grid) {
  std::string out = "imbalance,noise,error,pa,kappa,f1,ba,accuracy,tp,tn,pre,rec,seed\n";
  const auto opt = [](const std::optional<Scalar>& v) {
    return v ? format_scalar(*v) : std::string("nan");
  };
  for (const SweepPoint& p : grid.points) {
    if (!p.feasible) continue;
    out += format_scalar(p.imbalance) + ',' + format_scalar(p.noise) + ',' +
           format_scalar(p.error) + ',' + opt(p.metrics.pa) + ',' + opt(p.metrics.kappa) + ',' +
           opt(p.metrics.f1) + ',' + opt(p.metrics.ba) + ',' + format_scalar(p.metrics.accuracy) +
           ',' + opt(p.metrics.tp) + ',' + opt(p.metrics.tn) + ',' + opt(p.metrics.pre) + ',' +
           opt(p.metrics.rec) + ',' + std::to_string(p.seed) + '\n';
  }
  return out;
}

std::string labeled_sample_to_csv(const LabeledSample& sample) {
  std::string out = "row,label\n";
  for (Index i = 0; i < sample.size(); ++i)
    out += std::to_string(sample.rows[static_cast<std::size_t>(i)]) + ',' +
           std::to_string(sample.labels(i)) + '\n';
  return out;
}

VectorXi read_predictions_column_csv(const std::string& path, Index expected_rows) {
  const CsvTable table = read_csv_file(path);
  const Index col = table.require_column("y_pred", path);
  if (static_cast<Index>(table.rows.size()) != expected_rows)
    throw std::runtime_error(path + ": expected " + std::to_string(expected_rows) +
                             " predictions, got " + std::to_string(table.rows.size()));
  VectorXi preds(expected_rows);
  for (Index r = 0; r < expected_rows; ++r)
    preds(r) =
        parse_int(table.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)], path,
                  r + 2);
  return preds;
}

}  // namespace pamet::io
