#pragma once

#include <optional>

#include "pamet/loss.hpp"
#include "pamet/types.hpp"

namespace pamet {

/// Risk normalized against the marginal-best constant predictor:
/// pa = 1 - model_risk / bmp_risk. 1 means perfect, 0 means no better
/// than the constant baseline, negative means worse than it.
struct PaResult {
  Scalar model_risk = 0;
  Scalar bmp_risk = 0;
  Scalar pa = 0;
  // The labels admitted a zero-risk constant predictor and the model
  // matched it; pa is 1 by convention.
  bool trivial_problem = false;

  friend bool operator==(const PaResult&, const PaResult&) = default;
};

/// Throws std::domain_error when bmp_risk is 0 but model_risk is not:
/// the ratio is undefined and a silent infinity would poison sweeps.
PaResult prediction_advantage(Scalar model_risk, Scalar bmp_risk);

struct RiskInterval {
  Scalar lo = 0;
  Scalar hi = 0;
  Scalar confidence = 0;

  friend bool operator==(const RiskInterval&, const RiskInterval&) = default;
};

/// Two-sided Hoeffding band around an empirical risk of a loss bounded
/// in a range of the given width, clipped to [0, loss_range].
RiskInterval hoeffding_interval(Scalar point_risk, Index n, Scalar loss_range,
                                Scalar confidence);

/// Derives the range from the loss family; throws "loss range required"
/// for unbounded losses unless the caller declares one.
RiskInterval hoeffding_interval(const LossSpec& loss, Scalar point_risk, Index n,
                                Scalar confidence,
                                std::optional<Scalar> declared_range = std::nullopt);

}  // namespace pamet
