#include "pamet/advantage.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pamet {

PaResult prediction_advantage(Scalar model_risk, Scalar bmp_risk) {
  if (std::isnan(model_risk) || model_risk < 0)
    throw std::invalid_argument("model risk must be nonnegative");
  if (!(bmp_risk >= 0) || std::isinf(bmp_risk))
    throw std::invalid_argument("baseline risk must be finite and nonnegative");
  PaResult result;
  result.model_risk = model_risk;
  result.bmp_risk = bmp_risk;
  if (bmp_risk == 0) {
    if (model_risk > 0)
      throw std::domain_error(
          "degenerate BMP: labels admit a zero-risk constant predictor");
    result.pa = 1.0;
    result.trivial_problem = true;
    return result;
  }
  result.pa = 1.0 - model_risk / bmp_risk;
  return result;
}

RiskInterval hoeffding_interval(Scalar point_risk, Index n, Scalar loss_range,
                                Scalar confidence) {
  if (n < 1) throw std::invalid_argument("sample count must be at least 1");
  if (!(loss_range > 0) || std::isinf(loss_range))
    throw std::invalid_argument("loss range must be positive and finite");
  if (!(confidence > 0) || !(confidence < 1))
    throw std::invalid_argument("confidence must lie strictly between 0 and 1");
  const Scalar half_width =
      loss_range * std::sqrt(std::log(2.0 / (1.0 - confidence)) / (2.0 * static_cast<Scalar>(n)));
  RiskInterval interval;
  interval.lo = std::clamp(point_risk - half_width, 0.0, loss_range);
  interval.hi = std::clamp(point_risk + half_width, 0.0, loss_range);
  interval.confidence = confidence;
  return interval;
}

RiskInterval hoeffding_interval(const LossSpec& loss, Scalar point_risk, Index n,
                                Scalar confidence, std::optional<Scalar> declared_range) {
  std::optional<Scalar> range = loss.value_range();
  if (!range) range = declared_range;
  if (!range) throw std::invalid_argument("loss range required");
  return hoeffding_interval(point_risk, n, *range, confidence);
}

}  // namespace pamet
