#pragma once

#include <optional>
#include <variant>

#include "pamet/advantage.hpp"
#include "pamet/bmp.hpp"
#include "pamet/confusion.hpp"
#include "pamet/label_distribution.hpp"
#include "pamet/loss.hpp"
#include "pamet/prediction_set.hpp"
#include "pamet/risk.hpp"
#include "pamet/types.hpp"

namespace pamet {

/// Estimate the marginal from the evaluation sample's own true labels.
struct FromEvalLabels {
  friend bool operator==(const FromEvalLabels&, const FromEvalLabels&) { return true; }
};

/// Caller-supplied constant baseline for the regression losses.
struct RegressionBaseline {
  Scalar constant = 0;
  Scalar risk = 0;

  friend bool operator==(const RegressionBaseline&, const RegressionBaseline&) = default;
};

using MarginalSource = std::variant<FromEvalLabels, LabelDistribution, RegressionBaseline>;

enum class MarginalProvenance { EvalLabels, SuppliedDistribution, SuppliedBaseline };

std::string to_string(MarginalProvenance provenance);

struct ConfusionBlock {
  ConfusionCells cells;
  MetricPanel metrics;

  friend bool operator==(const ConfusionBlock&, const ConfusionBlock&) = default;
};

struct EvaluationReport {
  Index n = 0;
  LossKind loss = LossKind::ZeroOne;
  Scalar model_risk = 0;
  BmpSolution bmp;
  PaResult pa;
  MarginalProvenance marginal_provenance = MarginalProvenance::EvalLabels;
  std::optional<LabelDistribution> marginal;     // classification families
  std::optional<ConfusionBlock> confusion;       // binary zero-one only
  std::optional<RiskInterval> risk_interval;     // bounded losses, 95% band

  friend bool operator==(const EvaluationReport&, const EvaluationReport&) = default;
};

/// Model risk, constant-baseline risk, and the prediction advantage in one
/// report; binary zero-one problems additionally carry the full rival
/// metric panel computed from the empirical confusion cells.
EvaluationReport evaluate(const PredictionSet& preds, const LossSpec& loss,
                          const MarginalSource& marginal = FromEvalLabels{});

}  // namespace pamet
