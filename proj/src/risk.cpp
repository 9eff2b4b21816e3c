#include "pamet/risk.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace pamet {

namespace {

void require_payload(const PredictionSet& preds, PayloadKind kind, const char* loss_name) {
  if (preds.payload() != kind)
    throw std::invalid_argument(std::string("payload shape does not match ") + loss_name +
                                " loss");
}

Scalar cross_entropy_risk(const PredictionSet& preds, const LossSpec& loss) {
  const MatrixX& probs = preds.predicted_probabilities();
  const VectorXi& truth = preds.true_classes();
  const Scalar log_norm = std::log(loss.log_base());
  Scalar total = 0;
  for (Index i = 0; i < preds.size(); ++i) {
    Scalar p = probs(i, truth(i));
    if (loss.epsilon_clamp()) p = std::max(p, *loss.epsilon_clamp());
    if (p <= 0) return std::numeric_limits<Scalar>::infinity();
    total += -std::log(p) / log_norm;
  }
  return total / static_cast<Scalar>(preds.size());
}

}  // namespace

Scalar empirical_risk(const PredictionSet& preds, const LossSpec& loss) {
  switch (loss.kind()) {
    case LossKind::ZeroOne:
      require_payload(preds, PayloadKind::ClassId, "zero-one");
      return (preds.true_classes().array() != preds.predicted_classes().array())
          .cast<Scalar>()
          .mean();
    case LossKind::CrossEntropy:
      require_payload(preds, PayloadKind::Probability, "cross-entropy");
      return cross_entropy_risk(preds, loss);
    case LossKind::Squared:
      require_payload(preds, PayloadKind::RealValue, "squared");
      return (preds.predicted_values() - preds.true_values()).array().square().mean();
    case LossKind::Absolute:
      require_payload(preds, PayloadKind::RealValue, "absolute");
      return (preds.predicted_values() - preds.true_values()).array().abs().mean();
    case LossKind::CostSensitive: {
      require_payload(preds, PayloadKind::ClassId, "cost-sensitive");
      const MatrixX& cost = loss.cost_matrix();
      if (preds.class_count() > cost.rows())
        throw std::invalid_argument("cost matrix smaller than the class count");
      Scalar total = 0;
      for (Index i = 0; i < preds.size(); ++i)
        total += cost(preds.predicted_classes()(i), preds.true_classes()(i));
      return total / static_cast<Scalar>(preds.size());
    }
  }
  throw std::logic_error("unhandled loss kind");
}

}  // namespace pamet
