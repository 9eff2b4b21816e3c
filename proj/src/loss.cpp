#include "pamet/loss.hpp"

#include <cmath>
#include <stdexcept>

namespace pamet {

std::string to_string(LossKind kind) {
  switch (kind) {
    case LossKind::ZeroOne: return "zero_one";
    case LossKind::CrossEntropy: return "cross_entropy";
    case LossKind::Squared: return "squared";
    case LossKind::Absolute: return "absolute";
    case LossKind::CostSensitive: return "cost_sensitive";
  }
  return "unknown";
}

std::optional<LossKind> loss_kind_from_string(std::string_view name) {
  if (name == "zero_one") return LossKind::ZeroOne;
  if (name == "cross_entropy") return LossKind::CrossEntropy;
  if (name == "squared") return LossKind::Squared;
  if (name == "absolute") return LossKind::Absolute;
  if (name == "cost_sensitive") return LossKind::CostSensitive;
  return std::nullopt;
}

LossSpec LossSpec::zero_one() { return LossSpec(LossKind::ZeroOne); }

LossSpec LossSpec::cross_entropy(Scalar log_base) {
  if (!(log_base > 0) || log_base == 1)
    throw std::invalid_argument("log base must be positive and != 1");
  LossSpec spec(LossKind::CrossEntropy);
  spec.log_base_ = log_base;
  return spec;
}

LossSpec LossSpec::squared() { return LossSpec(LossKind::Squared); }

LossSpec LossSpec::absolute() { return LossSpec(LossKind::Absolute); }

LossSpec LossSpec::cost_sensitive(MatrixX cost_matrix) {
  if (cost_matrix.rows() < 2 || cost_matrix.rows() != cost_matrix.cols())
    throw std::invalid_argument("cost matrix must be square with k >= 2");
  if ((cost_matrix.array() < 0).any())
    throw std::invalid_argument("cost matrix entries must be nonnegative");
  LossSpec spec(LossKind::CostSensitive);
  spec.cost_matrix_ = std::move(cost_matrix);
  return spec;
}

LossSpec LossSpec::with_epsilon_clamp(Scalar epsilon) const {
  if (kind_ != LossKind::CrossEntropy)
    throw std::invalid_argument("epsilon clamp applies to cross-entropy only");
  if (!(epsilon > 0) || epsilon >= 1)
    throw std::invalid_argument("epsilon clamp must lie in (0, 1)");
  LossSpec spec = *this;
  spec.epsilon_clamp_ = epsilon;
  return spec;
}

const MatrixX& LossSpec::cost_matrix() const {
  if (kind_ != LossKind::CostSensitive)
    throw std::logic_error("cost matrix is only defined for cost-sensitive loss");
  return cost_matrix_;
}

std::optional<Scalar> LossSpec::value_range() const {
  switch (kind_) {
    case LossKind::ZeroOne:
      return 1.0;
    case LossKind::CostSensitive:
      return cost_matrix_.maxCoeff() - cost_matrix_.minCoeff();
    case LossKind::CrossEntropy:
      if (epsilon_clamp_) return -std::log(*epsilon_clamp_) / std::log(log_base_);
      return std::nullopt;
    case LossKind::Squared:
    case LossKind::Absolute:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace pamet
