#pragma once

#include <optional>
#include <string>

#include "pamet/evaluate.hpp"
#include "pamet/loss.hpp"
#include "pamet/prediction_set.hpp"
#include "pamet/synthesis.hpp"
#include "pamet/sweep.hpp"
#include "pamet/types.hpp"

namespace pamet::io {

/// Predictions from CSV (columns y_true,y_pred or y_true,p_0..p_{k-1})
/// or JSONL (the same fields, one object per line). The schema comes
/// from the header / keys, never from sniffing values.
PredictionSet read_predictions_csv(const std::string& path, const LossSpec& loss,
                                   std::optional<int> class_count = std::nullopt);
PredictionSet read_predictions_jsonl(const std::string& path, const LossSpec& loss,
                                     std::optional<int> class_count = std::nullopt);

/// Square numeric CSV, no header; row i column j is the cost of
/// predicting i when the truth is j.
MatrixX read_cost_matrix_csv(const std::string& path);

/// JSON {"probs": [...], "class_ids": [...]} (ids optional).
LabelDistribution read_marginal_json(const std::string& path);
/// JSON {"constant": c, "risk": r} for the regression losses.
RegressionBaseline read_regression_baseline_json(const std::string& path);

/// Labeled rows for the degradation harness. label_column is a header
/// name or a 0-based index; labels must be 0/1. Row handles are 0-based
/// data row numbers.
LabeledSample read_labeled_sample_csv(const std::string& path, const std::string& label_column);

/// One row per feasible grid point, fixed column order:
/// imbalance,noise,error,pa,kappa,f1,ba,accuracy,tp,tn,pre,rec,seed
std::string sweep_grid_to_csv(const SweepGrid& grid);

/// Degraded point datasets for external predictors: columns row,label.
std::string labeled_sample_to_csv(const LabeledSample& sample);
/// Reads back per-point predictions: column y_pred, one per row in order.
VectorXi read_predictions_column_csv(const std::string& path, Index expected_rows);

}  // namespace pamet::io
