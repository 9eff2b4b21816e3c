#include "pamet/evaluate.hpp"

#include <stdexcept>

namespace pamet {

namespace {

constexpr Scalar kIntervalConfidence = 0.95;

LabelDistribution classification_marginal(const PredictionSet& preds,
                                          const MarginalSource& source,
                                          MarginalProvenance& provenance) {
  if (std::holds_alternative<FromEvalLabels>(source)) {
    provenance = MarginalProvenance::EvalLabels;
    return estimate_marginal(preds.true_classes(), preds.class_count());
  }
  if (const auto* dist = std::get_if<LabelDistribution>(&source)) {
    if (dist->size() != preds.class_count())
      throw std::invalid_argument("supplied marginal does not match the class count");
    provenance = MarginalProvenance::SuppliedDistribution;
    return *dist;
  }
  throw std::invalid_argument("a regression baseline cannot serve a classification loss");
}

BmpSolution regression_bmp(const PredictionSet& preds, const LossSpec& loss,
                           const MarginalSource& source, MarginalProvenance& provenance) {
  if (std::holds_alternative<FromEvalLabels>(source)) {
    provenance = MarginalProvenance::EvalLabels;
    return loss.kind() == LossKind::Squared ? bmp_squared(preds.true_values())
                                            : bmp_absolute(preds.true_values());
  }
  if (const auto* baseline = std::get_if<RegressionBaseline>(&source)) {
    if (!(baseline->risk >= 0))
      throw std::invalid_argument("baseline risk must be nonnegative");
    provenance = MarginalProvenance::SuppliedBaseline;
    return {baseline->constant, baseline->risk};
  }
  throw std::invalid_argument("a label distribution cannot serve a regression loss");
}

ConfusionBlock binary_confusion(const PredictionSet& preds) {
  std::int64_t tp = 0, fp = 0, fn = 0, tn = 0;
  const VectorXi& truth = preds.true_classes();
  const VectorXi& pred = preds.predicted_classes();
  for (Index i = 0; i < preds.size(); ++i) {
    if (pred(i) == 1)
      (truth(i) == 1 ? tp : fp) += 1;
    else
      (truth(i) == 1 ? fn : tn) += 1;
  }
  const ConfusionCells cells = cells_from_counts(tp, fp, fn, tn);
  return {cells, panel(cells)};
}

}  // namespace

std::string to_string(MarginalProvenance provenance) {
  switch (provenance) {
    case MarginalProvenance::EvalLabels: return "eval_labels";
    case MarginalProvenance::SuppliedDistribution: return "supplied_distribution";
    case MarginalProvenance::SuppliedBaseline: return "supplied_baseline";
  }
  return "unknown";
}

EvaluationReport evaluate(const PredictionSet& preds, const LossSpec& loss,
                          const MarginalSource& marginal) {
  EvaluationReport report;
  report.n = preds.size();
  report.loss = loss.kind();
  report.model_risk = empirical_risk(preds, loss);

  switch (loss.kind()) {
    case LossKind::ZeroOne: {
      const LabelDistribution dist =
          classification_marginal(preds, marginal, report.marginal_provenance);
      report.bmp = bmp_zero_one(dist);
      report.marginal = dist;
      break;
    }
    case LossKind::CrossEntropy: {
      const LabelDistribution dist =
          classification_marginal(preds, marginal, report.marginal_provenance);
      report.bmp = bmp_cross_entropy(dist, loss.log_base());
      report.marginal = dist;
      break;
    }
    case LossKind::CostSensitive: {
      const LabelDistribution dist =
          classification_marginal(preds, marginal, report.marginal_provenance);
      report.bmp = bmp_cost_sensitive(dist, loss.cost_matrix());
      report.marginal = dist;
      break;
    }
    case LossKind::Squared:
    case LossKind::Absolute:
      report.bmp = regression_bmp(preds, loss, marginal, report.marginal_provenance);
      break;
  }

  report.pa = prediction_advantage(report.model_risk, report.bmp.bmp_risk);

  if (loss.kind() == LossKind::ZeroOne && preds.class_count() == 2)
    report.confusion = binary_confusion(preds);

  if (const auto range = loss.value_range(); range && *range > 0)
    report.risk_interval =
        hoeffding_interval(report.model_risk, report.n, *range, kIntervalConfidence);

  return report;
}

}  // namespace pamet
